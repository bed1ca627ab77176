#pragma once

#include <span>
#include <vector>

#include "replica/pmf.hpp"

namespace replica {

/// Sorts and drops values within kTimeEps of their predecessor.
void sort_unique_times(std::vector<double>& values);

/// Integer combinations sum_j w_j alpha_j with sum_j |w_j| <= m that land in
/// [0, max_time]. Every start time of an optimal m-machine policy is one of them.
struct LatticeSet {
   std::vector<double> values;
   int machines = 0;
};

LatticeSet lattice_set(const DiscretePmf& pmf, int machines);

/// Upper bound 2^l * C(m+l-1, l-1) on the lattice size.
double lattice_size_bound(std::size_t atoms, int machines);

/// Candidate start times for the machine after `prefix`. The empty prefix
/// gives {0} plus the support; each prefix entry t maps every previous
/// candidate u to u + t and u + t - alpha_j, keeping results in [0, max_time].
std::vector<double> corner_points(std::span<const double> prefix, const DiscretePmf& pmf);

}  // namespace replica

#include "replica/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "replica/bimodal.hpp"
#include "replica/corners.hpp"
#include "replica/error.hpp"
#include "replica/multitask.hpp"
#include "replica/search.hpp"
#include "replica/simulate.hpp"

namespace replica {
namespace {

using nlohmann::json;

/// Rounds to 9 significant digits so reports print compactly.
double sig9(double x) {
   char buf[40];
   std::snprintf(buf, sizeof buf, "%.9g", x);
   return std::strtod(buf, nullptr);
}

json sig9(std::span<const double> xs) {
   json arr = json::array();
   for (double x : xs) arr.push_back(sig9(x));
   return arr;
}

struct RunConfig {
   std::string subcommand;
   std::string pmf_path;
   std::string policy;
   double lambda = 0.5;
   int machines = 2;
   int tasks = 1;
   int k = 2;
   std::uint64_t trials = 100'000;
   std::uint64_t seed = 1;
   std::string mode = "exhaustive";
   std::string out_path;
   double a1 = 0.0;
   double a2 = 0.0;
   double p1 = 0.0;
};

json tool_block() { return {{"name", "replica"}, {"version", REPLICA_VERSION}}; }

json pmf_json(const DiscretePmf& pmf) {
   return {{"support", sig9(pmf.support())}, {"probs", sig9(pmf.probs())}};
}

void check_counts(const RunConfig& c) {
   if (c.machines < 1) throw Error(ErrorKind::PreconditionViolated, "--machines must be at least 1");
   if (c.tasks < 1) throw Error(ErrorKind::PreconditionViolated, "--tasks must be at least 1");
   if (c.k < 1) throw Error(ErrorKind::PreconditionViolated, "--k must be at least 1");
   if (c.trials < 1) throw Error(ErrorKind::PreconditionViolated, "--trials must be at least 1");
}

StartVector policy_arg(const RunConfig& c, const DiscretePmf& pmf) {
   if (c.policy.empty()) throw Error(ErrorKind::MissingFlag, "--policy is required");
   return make_start_vector(parse_times(c.policy), pmf);
}

json eval_report(const RunConfig& c) {
   const DiscretePmf pmf = load_pmf(c.pmf_path);
   const CostWeights w(c.lambda);
   const PolicyEvaluation e = eval_single(pmf, policy_arg(c, pmf));
   return {{"config", {{"pmf", c.pmf_path}, {"pmf_values", pmf_json(pmf)}, {"policy", format_times(e.policy.times())},
                       {"lambda", c.lambda}}},
           {"policy", format_times(e.policy.times())},
           {"expected_T", sig9(e.expected_T)},
           {"expected_C", sig9(e.expected_C)},
           {"cost", sig9(cost(e, w))},
           {"t_pmf", pmf_json(e.t_pmf)}};
}

json search_report(const RunConfig& c) {
   const DiscretePmf pmf = load_pmf(c.pmf_path);
   const CostWeights w(c.lambda);
   StartVector policy;
   if (c.mode == "exhaustive") {
      policy = exhaustive_search(pmf, c.machines, w).policy;
   } else if (c.mode == "heuristic") {
      policy = heuristic_k(pmf, c.machines, c.k, w);
   } else {
      throw Error(ErrorKind::ParseError, "--mode must be exhaustive or heuristic");
   }
   const PolicyEvaluation e = eval_single(pmf, policy);
   json config = {{"pmf", c.pmf_path}, {"mode", c.mode}, {"machines", c.machines}, {"lambda", c.lambda}};
   if (c.mode == "heuristic") config["k"] = c.k;
   return {{"config", config},
           {"policy", format_times(policy.times())},
           {"expected_T", sig9(e.expected_T)},
           {"expected_C", sig9(e.expected_C)},
           {"cost", sig9(cost(e, w))}};
}

json lattice_report(const RunConfig& c) {
   const DiscretePmf pmf = load_pmf(c.pmf_path);
   const LatticeSet lattice = lattice_set(pmf, c.machines);
   json report = {{"config", {{"pmf", c.pmf_path}, {"machines", c.machines}}},
                  {"values", sig9(lattice.values)},
                  {"size", lattice.values.size()},
                  {"size_bound", lattice_size_bound(pmf.size(), c.machines)}};
   if (!c.policy.empty()) {
      // The prefix is taken as given; corner points depend on its order.
      std::vector<double> prefix = parse_times(c.policy);
      make_start_vector(prefix, pmf);
      report["config"]["policy"] = format_times(prefix);
      report["corner_points"] = sig9(corner_points(prefix, pmf));
   }
   return report;
}

json bimodal_report(const RunConfig& c) {
   const BimodalParams b(c.a1, c.a2, c.p1);
   const CostWeights w(c.lambda);
   const Classification cls = classify_optimal(b, w);
   const SuboptimalityFlags flags = suboptimality_checks(b);
   json tau = nullptr;
   try {
      Thresholds t = thresholds(b);
      tau = {{"tau1", sig9(t.tau1)}, {"tau2", sig9(t.tau2)}, {"tau3", sig9(t.tau3)}};
   } catch (const Error&) {
   }
   json candidates = json::array();
   for (const CandidateScore& s : cls.candidates) {
      candidates.push_back({{"policy", format_times(to_start_vector(b, s.policy).times())},
                            {"label", to_string(s.policy)},
                            {"expected_T", sig9(s.expected_T)},
                            {"expected_C", sig9(s.expected_C)},
                            {"cost", sig9(s.cost)}});
   }
   auto label = [](const std::optional<TwoMachinePolicy>& p) -> json {
      return p ? json(std::string(to_string(*p))) : json(nullptr);
   };
   return {{"config", {{"a1", c.a1}, {"a2", c.a2}, {"p1", c.p1}, {"lambda", c.lambda}}},
           {"region", to_string(cls.region)},
           {"flags", {{"a", flags.sub_a}, {"b", flags.sub_b}, {"c", flags.sub_c}}},
           {"thresholds", tau},
           {"candidates", candidates},
           {"winner", format_times(to_start_vector(b, cls.winner).times())},
           {"winner_label", to_string(cls.winner)},
           {"published_prediction", label(cls.published_prediction)},
           {"swapped_prediction", label(cls.swapped_prediction)}};
}

json multitask_report(const RunConfig& c) {
   const DiscretePmf pmf = load_pmf(c.pmf_path);
   const CostWeights w(c.lambda);
   json config = {{"pmf", c.pmf_path}, {"tasks", c.tasks}, {"lambda", c.lambda}};
   StartVector policy;
   if (c.policy.empty()) {
      policy = heuristic_multi(pmf, c.machines, c.tasks, c.k, w);
      config["machines"] = c.machines;
      config["k"] = c.k;
      config["policy_source"] = "heuristic";
   } else {
      policy = policy_arg(c, pmf);
      config["policy_source"] = "given";
   }
   const MultiTaskEvaluation e = eval_replicated(pmf, policy, c.tasks);
   return {{"config", config},
           {"policy", format_times(policy.times())},
           {"expected_T_max", sig9(e.expected_T_max)},
           {"expected_C", sig9(e.expected_C)},
           {"expected_C_total", sig9(e.expected_C_total)},
           {"cost", sig9(cost(e.expected_T_max, e.expected_C, w))},
           {"per_task_T_pmf", pmf_json(e.per_task_T_pmf)}};
}

json separation_report(const RunConfig& c) {
   const BimodalParams b(c.a1, c.a2, c.p1);
   const CostWeights w(c.lambda);
   const SeparationReport r = separation_demo(b, w);
   auto metrics = [](const JointMetrics& m) {
      return json{{"ET", sig9(m.expected_T)}, {"EC", sig9(m.expected_C)}, {"J", sig9(m.cost)}};
   };
   auto moments = [](const Moments& m) { return json{{"ET", sig9(m.expected_T)}, {"EC", sig9(m.expected_C)}}; };
   return {{"config", {{"a1", c.a1}, {"a2", c.a2}, {"p1", c.p1}, {"lambda", c.lambda}}},
           {"pi_s", metrics(r.separate)},
           {"pi_d", metrics(r.joint)},
           {"window", r.window},
           {"dominates_T", r.dominates_T},
           {"dominates_C", r.dominates_C},
           {"published", {{"pi_s", moments(r.published_separate)}, {"pi_d", moments(r.published_joint)}}}};
}

json estimate_json(const SimEstimate& s) {
   return {{"mean_T", sig9(s.mean_T)}, {"se_T", sig9(s.se_T)}, {"mean_C", sig9(s.mean_C)},
           {"se_C", sig9(s.se_C)},     {"trials", s.trials},    {"seed", s.seed}};
}

json simulate_report(const RunConfig& c) {
   const DiscretePmf pmf = load_pmf(c.pmf_path);
   const StartVector policy = policy_arg(c, pmf);
   json report = {{"config",
                   {{"pmf", c.pmf_path}, {"policy", format_times(policy.times())}, {"tasks", c.tasks},
                    {"trials", c.trials}, {"seed", c.seed}, {"rng", std::string(kRngAlgorithm)}}},
                  {"static", estimate_json(simulate_static(pmf, policy, c.tasks, c.trials, c.seed))}};
   if (c.tasks == 1) report["dynamic"] = estimate_json(simulate_dynamic(pmf, policy, c.trials, c.seed));
   return report;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
   if (c.out_path.empty()) {
      out << text;
      return;
   }
   std::ofstream file(c.out_path);
   if (!file) throw Error(ErrorKind::FileNotFound, "cannot write " + c.out_path);
   file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
   RunConfig c;
   CLI::App app{"Task replication policy analysis", "replica"};
   app.require_subcommand(1);

   auto pmf_opt = [&](CLI::App* sub) { sub->add_option("--pmf", c.pmf_path, "distribution JSON file")->required(); };
   auto common = [&](CLI::App* sub) {
      sub->add_option("--lambda", c.lambda, "weight on completion time")->default_val(0.5);
      sub->add_option("--out", c.out_path, "write the report here instead of stdout");
   };
   auto bimodal_opts = [&](CLI::App* sub) {
      sub->add_option("--a1", c.a1, "fast execution time")->required();
      sub->add_option("--a2", c.a2, "slow execution time")->required();
      sub->add_option("--p1", c.p1, "probability of the fast time")->required();
   };

   auto* eval = app.add_subcommand("eval", "exact E[T], E[C] of a start vector");
   pmf_opt(eval);
   eval->add_option("--policy", c.policy, "comma-separated start times")->required();
   common(eval);

   auto* front = app.add_subcommand("frontier", "Pareto frontier over the lattice, as CSV");
   pmf_opt(front);
   front->add_option("--machines", c.machines)->default_val(2);
   front->add_option("--out", c.out_path);

   auto* search = app.add_subcommand("search", "optimal or heuristic start vector");
   pmf_opt(search);
   search->add_option("--machines", c.machines)->default_val(2);
   search->add_option("--k", c.k)->default_val(2);
   search->add_option("--mode", c.mode)->default_val("exhaustive");
   common(search);

   auto* lattice = app.add_subcommand("lattice", "candidate start-time lattice");
   pmf_opt(lattice);
   lattice->add_option("--machines", c.machines)->default_val(2);
   lattice->add_option("--policy", c.policy, "prefix for corner points");
   lattice->add_option("--out", c.out_path);

   auto* bimodal = app.add_subcommand("bimodal", "two-machine bimodal classification");
   bimodal_opts(bimodal);
   common(bimodal);

   auto* multi = app.add_subcommand("multitask", "n tasks sharing one start vector");
   pmf_opt(multi);
   multi->add_option("--policy", c.policy, "start vector; the heuristic picks one when absent");
   multi->add_option("--tasks", c.tasks)->default_val(1);
   multi->add_option("--machines", c.machines)->default_val(2);
   multi->add_option("--k", c.k)->default_val(2);
   common(multi);

   auto* sep = app.add_subcommand("separation", "joint vs separate two-task policies");
   bimodal_opts(sep);
   common(sep);

   auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of E[T], E[C]");
   pmf_opt(sim);
   sim->add_option("--policy", c.policy)->required();
   sim->add_option("--tasks", c.tasks)->default_val(1);
   sim->add_option("--trials", c.trials)->default_val(100000);
   sim->add_option("--seed", c.seed)->default_val(1);
   sim->add_option("--out", c.out_path);

   std::vector<std::string> reversed(args.rbegin(), args.rend());
   try {
      app.parse(reversed);
   } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
   } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalidInput;
   }

   try {
      check_counts(c);
      const CLI::App* chosen = app.get_subcommands().front();
      c.subcommand = chosen->get_name();
      if (c.subcommand == "frontier") {
         const DiscretePmf pmf = load_pmf(c.pmf_path);
         emit(c, frontier_csv(frontier(pmf, c.machines)), out);
         return kExitOk;
      }
      json report;
      if (c.subcommand == "eval") report = eval_report(c);
      else if (c.subcommand == "search") report = search_report(c);
      else if (c.subcommand == "lattice") report = lattice_report(c);
      else if (c.subcommand == "bimodal") report = bimodal_report(c);
      else if (c.subcommand == "multitask") report = multitask_report(c);
      else if (c.subcommand == "separation") report = separation_report(c);
      else if (c.subcommand == "simulate") report = simulate_report(c);
      else throw Error(ErrorKind::UnknownSubcommand, c.subcommand);
      report["tool"] = tool_block();
      report["command"] = c.subcommand;
      emit(c, report.dump(2) + "\n", out);
      return kExitOk;
   } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitInvalidInput;
   }
}

}  // namespace replica

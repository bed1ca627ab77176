#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "replica/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
   int code;
   std::string out;
   std::string err;
};

Result run(std::vector<std::string> args) {
   std::ostringstream out, err;
   int code = replica::run_cli(args, out, err);
   return {code, out.str(), err.str()};
}

const std::string kMotivating = REPLICA_TEST_DATA "/motivating.json";
const std::string kThreePoint = REPLICA_TEST_DATA "/x_l3.json";

}  // namespace

TEST_CASE("cli: eval") {
   Result r = run({"eval", "--pmf", kMotivating, "--policy", "0,2"});
   REQUIRE(r.code == 0);
   json j = json::parse(r.out);
   CHECK(j["expected_T"].get<double>() == 2.23);
   CHECK(j["expected_C"].get<double>() == 2.46);
   CHECK(j["cost"].get<double>() == 2.345);
   CHECK(j["tool"]["name"] == "replica");
   CHECK(j["config"]["lambda"].get<double>() == 0.5);
   CHECK(j["policy"] == "0,2");

   Result bad = run({"eval", "--pmf", kMotivating, "--policy", "0,9"});
   CHECK(bad.code == 2);
   CHECK(bad.err.find("TimeOutOfRange") != std::string::npos);
}

TEST_CASE("cli: validation errors") {
   CHECK(run({"bogus"}).code == 2);
   CHECK(run({}).code == 2);
   CHECK(run({"eval", "--pmf", kMotivating}).code == 2);
   CHECK(run({"eval", "--pmf", "/no/such/file.json", "--policy", "0"}).code == 2);
   CHECK(run({"eval", "--pmf", kMotivating, "--policy", "0,x"}).code == 2);
   CHECK(run({"eval", "--pmf", kMotivating, "--policy", "0", "--lambda", "2"}).code == 2);
   CHECK(run({"search", "--pmf", kMotivating, "--mode", "greedy"}).code == 2);
   CHECK(run({"bimodal", "--a1", "7", "--a2", "2", "--p1", "0.5"}).code == 2);
   CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: budget exceeded exits 3") {
   const std::string path = "/tmp/replica_cli_wide.json";
   std::ofstream(path) << R"({"support":[1,2,3,4,5,6,7,8,9,10],"probs":[0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1]})";
   CHECK(run({"eval", "--pmf", path, "--policy", "0,0,0,0,0,0,0,0"}).code == 3);
   CHECK(run({"search", "--pmf", path, "--machines", "9"}).code == 3);
}

TEST_CASE("cli: frontier csv to file") {
   const std::string out = "/tmp/replica_cli_frontier.csv";
   std::remove(out.c_str());
   Result r = run({"frontier", "--pmf", kThreePoint, "--machines", "3", "--out", out});
   REQUIRE(r.code == 0);
   CHECK(r.out.empty());
   std::ifstream in(out);
   std::string header, first;
   std::getline(in, header);
   std::getline(in, first);
   CHECK(header == "expected_C,expected_T,policy");
   CHECK(first == "6.8,6.2,\"0,8,20\"");
}

TEST_CASE("cli: search, lattice, multitask") {
   json ex = json::parse(run({"search", "--pmf", kMotivating, "--lambda", "0.5"}).out);
   CHECK(ex["policy"] == "0,2");
   CHECK(ex["config"]["mode"] == "exhaustive");
   json he = json::parse(run({"search", "--pmf", kMotivating, "--mode", "heuristic", "--k", "1"}).out);
   CHECK(he["policy"] == "0,7");
   CHECK(he["config"]["k"] == 1);

   json lat = json::parse(run({"lattice", "--pmf", kThreePoint, "--machines", "3"}).out);
   CHECK(lat["values"] == json::array({0, 4, 8, 12, 16, 20}));
   json corners = json::parse(run({"lattice", "--pmf", kMotivating, "--policy", "0,0"}).out);
   CHECK(corners["corner_points"] == json::array({0, 2, 3, 5, 7}));

   json mt = json::parse(run({"multitask", "--pmf", kMotivating, "--policy", "0", "--tasks", "2"}).out);
   CHECK(mt["expected_T_max"].get<double>() == 2.95);
   CHECK(mt["expected_C"].get<double>() == 2.5);
   CHECK(mt["expected_C_total"].get<double>() == 5.0);
   json mh = json::parse(run({"multitask", "--pmf", kThreePoint, "--tasks", "10", "--machines", "3"}).out);
   CHECK(mh["config"]["policy_source"] == "heuristic");
}

TEST_CASE("cli: bimodal and separation") {
   json b = json::parse(run({"bimodal", "--a1", "2", "--a2", "7", "--p1", "0.9"}).out);
   CHECK(b["winner"] == "0,2");
   CHECK(b["region"] == "f");
   CHECK(b["flags"]["c"] == true);
   CHECK(b["candidates"].size() == 3);
   CHECK(b["thresholds"]["tau2"].get<double>() == doctest::Approx(13.1111111));

   json s = json::parse(run({"separation", "--a1", "3", "--a2", "10", "--p1", "0.8"}).out);
   for (const char* key : {"pi_s", "pi_d", "window", "dominates_T", "dominates_C"}) CHECK(s.contains(key));
   CHECK(s["pi_s"].contains("ET"));
   CHECK(s["pi_d"].contains("EC"));
   CHECK(s["window"] == true);
   CHECK(run({"separation", "--a1", "6", "--a2", "10", "--p1", "0.8"}).code == 2);
}

TEST_CASE("cli: simulate") {
   Result r = run({"simulate", "--pmf", kMotivating, "--policy", "0,2", "--trials", "20000", "--seed", "9"});
   REQUIRE(r.code == 0);
   json j = json::parse(r.out);
   CHECK(j["config"]["seed"] == 9);
   CHECK(j["config"]["rng"].get<std::string>().find("splitmix64") != std::string::npos);
   CHECK(j["static"]["trials"] == 20000);
   CHECK(j["dynamic"]["mean_T"] == j["static"]["mean_T"]);
   CHECK(run({"simulate", "--pmf", kMotivating, "--policy", "0,2", "--trials", "20000", "--seed", "9"}).out == r.out);
}

TEST_CASE("cli: printed policies parse back") {
   json j = json::parse(run({"search", "--pmf", kThreePoint, "--machines", "3", "--lambda", "0.3"}).out);
   const std::string policy = j["policy"];
   json back = json::parse(run({"eval", "--pmf", kThreePoint, "--policy", policy, "--lambda", "0.3"}).out);
   CHECK(back["policy"] == policy);
   CHECK(back["cost"].get<double>() == j["cost"].get<double>());
}

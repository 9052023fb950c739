#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdim/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace blockdim;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "blockdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  JobSpec job;
  if (auto code = parse_job(static_cast<int>(argv.size()), argv.data(), job, out, err))
    return {*code, out.str(), err.str()};
  const int code = run(job, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// (dim_S, dim_N, dim_Q, minimal, v_mult) per entry
using Row = std::tuple<std::int64_t, std::int64_t, std::int64_t, bool, std::int64_t>;

std::vector<Row> rows_from_json(const json& j) {
  std::vector<Row> out;
  for (const auto& e : j["entries"])
    out.emplace_back(e["dim_S"].get<std::int64_t>(), e["dim_N"].get<std::int64_t>(), e["dim_Q"].get<std::int64_t>(),
                     e["minimal"].get<bool>(), e["v_mult"].get<std::int64_t>());
  return out;
}

std::vector<Row> rows_from_csv(const std::string& text) {
  std::vector<Row> out;
  const auto ls = lines(text);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i], ',');
    REQUIRE(f.size() == 12);
    out.emplace_back(std::stoll(f[5]), std::stoll(f[6]), std::stoll(f[7]), f[8] == "true", std::stoll(f[9]));
  }
  return out;
}

std::vector<Row> rows_from_table(const std::string& text) {
  std::vector<Row> out;
  const auto ls = lines(text);
  for (const auto& l : ls) {
    if (l.rfind("  (", 0) != 0) continue;
    std::string body = l.substr(l.find(')') + 1);
    if (auto star = body.find('*'); star != std::string::npos) body = body.substr(0, star);
    std::istringstream is(body);
    std::int64_t s, n, q, v;
    std::string minimal;
    is >> s >> n >> q >> minimal >> v;
    out.emplace_back(s, n, q, minimal == "yes", v);
  }
  return out;
}

} // namespace

TEST_CASE("A1 integral regular, adjoint, JSON") {
  const auto r = invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["entries"].size() == 3);
  CHECK(j["sum_check"] == 3);
  CHECK(j["end_v_zero"] == 3);
  CHECK(j["type"] == "A");
  CHECK(j["rank"] == 1);
  CHECK(j["lambda"] == json::array({"0"}));
  CHECK(j["checks"]["lemma_6_4"] == true);
  CHECK(j["checks"]["cor_6_3"] == true);
}

TEST_CASE("A1 lambda = -rho") {
  const auto r = invoke({"--type", "A", "--rank", "1", "--lambda", "-1", "--v", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  int nonzero = 0;
  for (const auto& e : j["entries"]) nonzero += e["dim_S"].get<int>() > 0 ? 1 : 0;
  CHECK(nonzero == 2);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& lambda : {"0,0", "-1,-1", "1/2,0", "1/3,1/5"}) {
    const auto r = invoke({"--type", "B", "--rank", "2", "--lambda", lambda, "--v", "1,0", "--v", "0 2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    for (const auto& l : ls) CHECK(json::parse(l).dump() == l);
    CHECK(json::parse(ls[0])["lambda"] == json::parse(ls[1])["lambda"]);
  }
  const auto r = invoke({"--type", "A", "--rank", "2", "--lambda", "1/2,0", "--v", "1,1", "--format", "json"});
  CHECK(json::parse(r.out)["lambda"] == json::array({"1/2", "0"}));
}

TEST_CASE("the three formats carry the same numbers") {
  for (const auto& order : {"root", "pplus"}) {
    const std::vector<std::string> base{"--type", "A", "--rank", "2", "--lambda", "-1,-1", "--v", "1,1", "--order-variant", order};
    auto with = [&](const char* format) {
      auto args = base;
      args.push_back("--format");
      args.push_back(format);
      const auto r = invoke(args);
      REQUIRE(r.code == 0);
      return r.out;
    };
    const auto from_json = rows_from_json(json::parse(with("json")));
    CHECK(from_json.size() == 7);
    CHECK(rows_from_csv(with("csv")) == from_json);
    CHECK(rows_from_table(with("table")) == from_json);
  }
}

TEST_CASE("order variant selects the reported minimality") {
  const std::vector<std::string> base{"--type", "A", "--rank", "2", "--lambda", "-1,-1", "--v", "1,1", "--format", "json"};
  auto root = base, pplus = base;
  pplus.insert(pplus.end(), {"--order-variant", "pplus"});
  const auto a = json::parse(invoke(root).out), b = json::parse(invoke(pplus).out);
  CHECK(a["entries"] != b["entries"]);
  for (std::size_t i = 0; i < a["entries"].size(); ++i) {
    CHECK(a["entries"][i]["minimal"] == a["entries"][i]["minimal_root_lattice"]);
    CHECK(b["entries"][i]["minimal"] == b["entries"][i]["minimal_p_plus"]);
    CHECK(a["entries"][i]["dim_S"] == b["entries"][i]["dim_S"]);
  }
  CHECK_FALSE(a["order_disagreements"].empty());
  CHECK(a["checks"]["order_agreement"] == false);
}

TEST_CASE("fast path gives identical output") {
  const std::vector<std::string> base{"--type", "G", "--rank", "2", "--lambda", "1/5,1/7", "--v", "0,1", "--format", "json"};
  auto fast = base;
  fast.push_back("--fast-path");
  CHECK(invoke(base).out == invoke(fast).out);
  // not in general position: the flag is ignored
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "2", "--fast-path"}).code == 0);
}

TEST_CASE("input errors exit with 1") {
  const auto nondominant = invoke({"--type", "A", "--rank", "1", "--lambda", "-2", "--v", "2"});
  CHECK(nondominant.code == 1);
  CHECK(nondominant.err.find("not dominant") != std::string::npos);
  CHECK(invoke({"--type", "A", "--rank", "2", "--lambda", "0", "--v", "1,1"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "-1"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "1/2"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "x", "--v", "2"}).code == 1);
  CHECK(invoke({"--type", "Q", "--rank", "1", "--lambda", "0", "--v", "2"}).code == 1);
  CHECK(invoke({"--type", "D", "--rank", "3", "--lambda", "0,0,0", "--v", "0,0,0"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "0"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "2", "--format", "xml"}).code == 1);
  CHECK(invoke({"--rank", "1", "--lambda", "0", "--v", "2"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("Ext subcommand") {
  const auto r = invoke({"--type", "A", "--rank", "3", "--lambda", "0,0,0", "--ext", "e", "2132", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ext"] == json::array({0, 0, 1, 0, 1, 0, 0}));
  CHECK(j["y"] == "2132");
  CHECK(invoke({"--type", "A", "--rank", "1", "--lambda", "-1", "--ext", "e", "1"}).code == 1);
  CHECK(invoke({"--type", "A", "--rank", "2", "--lambda", "0,0", "--ext", "e", "14"}).code == 1);
  const auto text = invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--ext", "e", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("0 1") != std::string::npos);
}

TEST_CASE("KL dump") {
  const std::string path = "blockdim_test_kl_dump.txt";
  const auto r = invoke({"--type", "A", "--rank", "1", "--lambda", "0", "--v", "0", "--kl-dump", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::stringstream contents;
  contents << f.rdbuf();
  CHECK(contents.str() == "e;e;1\ne;1;1\n1;1;1\n");
  std::remove(path.c_str());
}

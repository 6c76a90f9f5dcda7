#include "commands.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = nilbound::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bound") {
  Result r = run({"bound", "--p", "2", "--k", "6", "--c", "4", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["f_upper"] == 188);

  r = run({"bound", "--p", "2", "--k", "1", "--c", "1", "--json"});
  const json one = json::parse(r.out);
  CHECK(one["f_upper"] == 1);
  CHECK(one["elementary"] == 1);
  CHECK(one["binomial_lower"] == 1);

  r = run({"bound", "--p", "5", "--k", "4", "--c", "2", "--json"});
  CHECK(json::parse(r.out)["f_upper"] == 8);
  CHECK(json::parse(r.out)["binomial_lower"] == 4);

  r = run({"bound", "--p", "2", "--k", "6", "--c", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("188") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"bound", "--p", "4", "--k", "2", "--c", "2"}).code == 1);
  CHECK(run({"bound", "--p", "2", "--k", "0", "--c", "2"}).code == 1);
  CHECK(run({"bound", "--p", "2"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"table"}).code == 1);
  CHECK(run({"search", "--p", "6", "--k", "1"}).code == 1);
  CHECK(run({"construct", "/nonexistent/blueprint.json"}).code == 1);
}

TEST_CASE("construct verifies and analyze reproduces the prediction") {
  const std::vector<std::string> blueprints = {
      R"({"kind":"affine-unitriangular","params":{"p":2,"k":2,"m":1}})",
      R"({"kind":"wreath-polynomial","params":{"p":2,"u":2,"v":2,"c":2}})",
      R"({"kind":"dihedral-abelian","params":{"k":4,"c":3}})",
      R"({"kind":"product","params":{"factors":[{"kind":"sylow-wreath","params":{"p":2,"k":1}},
                                                {"kind":"sylow-wreath","params":{"p":3,"k":1}}]}})",
  };
  for (const auto &bp : blueprints) {
    CAPTURE(bp);
    const Result built = run({"construct", "--json"}, bp);
    REQUIRE(built.code == 0);
    const json doc = json::parse(built.out);
    const Result analyzed = run({"analyze", "--json"}, built.out);
    REQUIRE(analyzed.code == 0);
    CHECK(json::parse(analyzed.out)["prediction"] == doc["prediction"]);
    // Group JSON alone is accepted too.
    CHECK(json::parse(run({"analyze", "--json"}, doc["group"].dump()).out)["prediction"] ==
          doc["prediction"]);
  }
  const json ex = json::parse(run({"construct", "--json"}, blueprints[0]).out);
  CHECK(ex["prediction"]["degree"] == 4);
  CHECK(ex["prediction"]["log_p_order"] == 3);
  const json wp = json::parse(run({"construct", "--json"}, blueprints[1]).out);
  CHECK(wp["prediction"]["degree"] == 16);
  CHECK(wp["prediction"]["log_p_order"] == 8);
  const json prod = json::parse(run({"analyze", "--json"}, run({"construct", "--json"}, blueprints[3]).out).out);
  CHECK(prod["regular"] == true);
  CHECK(prod["abelian"] == true);
  CHECK(prod["order"] == "6");
}

TEST_CASE("construct refuses past the degree guard with exit 2") {
  const Result r = run({"construct", "--json"}, R"({"kind":"sylow-wreath","params":{"p":2,"k":7}})");
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["prediction"]["log_p_order"] == 127);
}

TEST_CASE("analyze") {
  const json d4 = json::parse(run({"analyze", "--json"},
                                  R"({"degree":4,"generators":[[1,2,3,0],[2,1,0,3]]})")
                                  .out);
  CHECK(d4["order"] == "8");
  CHECK(d4["nilpotency_class"] == 2);
  CHECK(d4["transitive"] == true);
  CHECK(d4["center_order"] == "2");
  CHECK(d4["lower_central_series"] == json({"8", "2", "1"}));

  const json cyc = json::parse(run({"analyze", "--json"}, R"({"degree":8,"generators":[[1,2,3,4,5,6,7,0]]})").out);
  CHECK(cyc["regular"] == true);
  CHECK(cyc["nilpotency_class"] == 1);

  const json s3 = json::parse(run({"analyze", "--json"}, R"({"degree":3,"generators":[[1,2,0],[1,0,2]]})").out);
  CHECK(s3["nilpotency_class"] == "not nilpotent");
  CHECK(s3["prediction"]["class_bound"].is_null());

  const Result affine = run({"construct", "--json"}, R"({"kind":"affine-unitriangular","params":{"p":3,"k":2,"m":1}})");
  const json a = json::parse(run({"analyze", "--json"}, affine.out).out);
  CHECK(a["order"] == "27");
  CHECK(a["nilpotency_class"] == 2);
  CHECK(a["center_order"] == "3");
}

TEST_CASE("analyze reports malformed input with its position") {
  Result r = run({"analyze"}, R"({"degree":3,"generators":[[0,1,2],[2,2,0]]})");
  CHECK(r.code == 1);
  CHECK(r.err.find("generator 1, position 1") != std::string::npos);
  r = run({"analyze"}, R"({"degree":3,"generators":[[0,1,2],)");
  CHECK(r.code == 1);
  CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("search") {
  Result r = run({"search", "--p", "2", "--k", "2", "--cmax", "4", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["exponents"] == json({2, 3, 3, 3}));
  r = run({"search", "--p", "2", "--k", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("refused") != std::string::npos);
  CHECK(run({"search", "--p", "2", "--k", "3", "--budget", "5"}).code == 2);
}

TEST_CASE("budget comes from the environment unless given") {
  ::setenv("NILBOUND_BUDGET", "5", 1);
  CHECK(run({"search", "--p", "2", "--k", "3"}).code == 2);
  CHECK(run({"search", "--p", "2", "--k", "3", "--budget", "100000"}).code == 0);
  ::unsetenv("NILBOUND_BUDGET");
  CHECK(run({"search", "--p", "2", "--k", "3"}).code == 0);
}

TEST_CASE("tables") {
  Result r = run({"table", "--table1", "--kmax", "10", "--json"});
  REQUIRE(r.code == 0);
  bool found = false;
  const json table = json::parse(r.out);
  for (const auto &row : table["rows"])
    if (row["k"] == 6 && row["c"] == 4) {
      found = true;
      CHECK(row["f_upper"] == 188);
      CHECK(row["f_closed"] == 188);
    }
  CHECK(found);

  r = run({"table", "--table2", "--json"});
  REQUIRE(r.code == 0);
  const json rows = json::parse(r.out)["rows"];
  REQUIRE(rows.size() == 5);
  CHECK(rows[2]["source"] == "exact");
  CHECK(rows[2]["exponents"][3] == 7);
  CHECK(rows[3]["source"] == "reference (not recomputed)");
  CHECK(run({"table", "--table2", "--kmax", "4"}).code == 2);
  CHECK(run({"table", "--table1", "--table2"}).code == 1);
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"search", "--p", "2", "--k", "3", "--json"},
        std::vector<std::string>{"table", "--table2", "--json"},
        std::vector<std::string>{"bound", "--p", "3", "--k", "9", "--c", "3", "--json"}})
    CHECK(run(args).out == run(args).out);
  const std::string bp = R"({"kind":"abelian-class2","params":{"p":3,"k":3,"a":1}})";
  CHECK(run({"construct", "--json"}, bp).out == run({"construct", "--json"}, bp).out);
}

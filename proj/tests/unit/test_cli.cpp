// Copyright 2026 The posetop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "posetop/cli.hpp"
#include "posetop/io.hpp"

using namespace posetop;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Workspace {
 public:
  Workspace() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() /
           ("posetop_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string file(const std::string& name, const std::string& content) {
    const std::string path = (dir_ / name).string();
    write_text_file(path, content);
    return path;
  }

  std::string poset_file(const std::string& name, const std::string& rows) {
    return file(name, emit_pm(BitMatrix::from_text(rows)));
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  fs::path dir_;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::string& path) {
  return emit_pm(parse_matrix_file(path));
}

}  // namespace

TEST_CASE("check") {
  Workspace ws;
  const auto chain = ws.poset_file("chain3.pm", "100;110;111");
  const auto anti = ws.poset_file("anti.pm", "10;01");
  const auto upper = ws.poset_file("upper.pm", "110;110;011");
  const auto bad = ws.file("bad.pm", "3\n100\n11\n111\n");

  Result r = run({"check", chain});
  CHECK(r.code == 0);
  CHECK(r.out == "valid poset matrix (connected)\n");
  r = run({"check", anti});
  CHECK(r.code == 0);
  CHECK(r.out == "valid poset matrix (disconnected)\n");
  r = run({"check", "--json", chain});
  CHECK(json::parse(r.out) == json{{"valid", true}, {"n", 3}, {"connected", true}});
  r = run({"check", upper});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("invalid: ", 0) == 0);
  r = run({"check", "--json", upper});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["valid"] == false);
  r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.err == "parse error: line 3, column 3: row too short\n");
  r = run({"check", ws.path("missing.pm")});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("i/o error", 0) == 0);
}

TEST_CASE("compose reproduces the worked example") {
  Workspace ws;
  const auto a = ws.poset_file("A.pm", "1000;1100;1010;1111");
  const auto b = ws.poset_file("B.pm", "100;110;101");
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"square", "100000;110000;111000;110100;100010;111111"},
      {"min", "100000;110000;111000;110100;100010;110011"},
      {"max", "100000;010000;111000;110100;100010;111111"},
      {"minmax", "100000;010000;111000;110100;100010;110011"}};
  for (const auto& [op, rows] : golden) {
    CAPTURE(op);
    const Result r = run({"compose", "--op", op, "--i", "2", a, b});
    CHECK(r.code == 0);
    CHECK(r.out == emit_pm(BitMatrix::from_text(rows)));
  }
  Result r = run({"compose", "--i", "2", "--json", a, b});
  CHECK(json::parse(r.out)["rows"][5] == "111111");
  r = run({"compose", "--i", "2", "-o", ws.path("C.pm"), a, b});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read(ws.path("C.pm")) ==
        emit_pm(BitMatrix::from_text("100000;110000;111000;110100;100010;111111")));
}

TEST_CASE("compose errors") {
  Workspace ws;
  const auto a = ws.poset_file("A.pm", "1000;1100;1010;1111");
  const auto b = ws.poset_file("B.pm", "100;110;101");
  const auto not_poset = ws.poset_file("X.pm", "11;01");
  CHECK(run({"compose", "--i", "9", a, b}).code == 2);
  CHECK(run({"compose", "--op", "weird", "--i", "1", a, b}).code == 2);
  CHECK(run({"compose", "--op", "boxed:101", "--i", "1", a, b}).code == 2);
  CHECK(run({"compose", "--i", "1", a}).code == 2);
  CHECK(run({"compose", a, b}).code == 2);
  CHECK(run({"compose", "--i", "1", not_poset, b}).code == 1);
  // A21 of A at position 2 holds ones, so the all-zeros fill is unmet.
  const Result r = run({"compose", "--op", "boxed:000", "--i", "2", a, b});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(run({"compose", "--op", "boxed:111", "--i", "2", a, b}).code == 0);
}

TEST_CASE("laws") {
  Result r = run({"laws", "--op", "square", "--max-n", "3"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["law"] == "nested");
  CHECK(doc[1]["law"] == "parallel");
  CHECK(doc[2]["law"] == "unit");
  for (const auto& entry : doc) {
    CHECK(entry["verdict"] == "pass");
    CHECK(entry["witness"].is_null());
    CHECK(entry["failures"] == 0);
  }
  CHECK(doc[0]["cases_checked"] == 6760);

  r = run({"laws", "--op", "minmax", "--max-n", "3"});
  CHECK(r.code == 1);
  doc = json::parse(r.out);
  CHECK(doc[0]["verdict"] == "fail");
  const json& w = doc[0]["witness"];
  CHECK(w["A"]["rows"] == json{"10", "11"});
  CHECK(w["B"]["rows"] == json{"10", "11"});
  CHECK(w["C"]["rows"] == json{"10", "11"});
  CHECK(w.contains("first_difference"));
  CHECK(w["left"] != w["right"]);

  r = run({"laws", "--op", "max", "--max-n", "6", "--random", "2000", "--seed",
           "7"});
  CHECK(r.code == 0);
  const Result again = run({"laws", "--op", "max", "--max-n", "6", "--random",
                            "2000", "--seed", "7"});
  CHECK(again.out == r.out);
  CHECK(run({"laws", "--op", "square", "--max-n", "0"}).code == 2);
  CHECK(run({"laws", "--max-n", "x"}).code == 2);
}

TEST_CASE("duality commands") {
  Workspace ws;
  const auto a = ws.poset_file("A.pm", "1000;1100;1010;1011");
  const auto chain = ws.poset_file("chain.pm", "100;110;111");
  const auto c = ws.poset_file("C.pm", "10000;11000;00100;11110;11111");
  const auto d = ws.poset_file("D.pm", "10000;01000;01100;11110;11111");
  const auto small = ws.poset_file("S.pm", "10;11");

  Result r = run({"dual", a});
  CHECK(r.code == 0);
  CHECK(r.out == emit_pm(BitMatrix::from_text("1000;1100;0010;1111")));
  r = run({"selfdual", chain});
  CHECK(r.code == 0);
  CHECK(r.out == "self-dual\n");
  r = run({"selfdual", a});
  CHECK(r.code == 1);
  CHECK(r.out == "not self-dual\n");
  r = run({"selfdual", "--json", chain});
  CHECK(json::parse(r.out) == json{{"self_dual", true}});

  r = run({"semiequidual", c, d});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json{{"alpha", {1, 2, 3}}});
  r = run({"semiequidual", chain, chain});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).is_null());
  CHECK(run({"semiequidual", chain, small}).code == 1);
}

TEST_CASE("structure commands") {
  Workspace ws;
  const auto connected = ws.poset_file("c.pm", "100;110;111");
  const auto disconnected = ws.poset_file("d.pm", "100;110;001");
  const auto c = ws.poset_file("C.pm", "1000;0100;0110;1111");
  const auto chain3 = ws.poset_file("chain3.pm", "100;110;111");
  const auto chain2 = ws.poset_file("chain2.pm", "10;11");
  const auto chain5 = ws.poset_file("chain5.pm", "10000;11000;11100;11110;11111");
  const auto vee = ws.poset_file("v.pm", "100;010;111");
  const auto fork = ws.poset_file("y.pm", "100;110;101");

  Result r = run({"classify", connected});
  CHECK(r.code == 0);
  CHECK(r.out == "connected\n");
  r = run({"classify", disconnected});
  CHECK(r.out == "disconnected, isolated block {3}\n");
  r = run({"classify", "--json", disconnected});
  CHECK(json::parse(r.out) == json{{"connected", false}, {"witness", {3}}});

  r = run({"factor", chain3});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "2 factorizations under square\n"
        "A = 10;11  i = 1  B = 10;11\n"
        "A = 10;11  i = 2  B = 10;11\n");
  r = run({"factor", "--json", c});
  const json found = json::parse(r.out);
  bool has_displayed_factorization = false;
  for (const auto& f : found) {
    has_displayed_factorization |= f["A"]["rows"] == json{"100", "010", "111"} &&
                               f["i"] == 2 && f["B"]["rows"] == json{"10", "11"};
  }
  CHECK(has_displayed_factorization);

  r = run({"invariance", "--alpha", "1..3", chain5, chain2});
  CHECK(r.code == 0);
  CHECK(r.out == "identical outputs over {1,2,3}\n");
  r = run({"invariance", "--alpha", "1,2", fork, chain2});
  CHECK(r.code == 1);
  CHECK(r.out == "outputs differ over {1,2}\n");
  r = run({"invariance", "--alpha", "1,2", vee, chain2});
  CHECK(r.code == 1);
  CHECK(r.err.find("precondition violated") != std::string::npos);
  CHECK(run({"invariance", "--alpha", "a..b", chain5, chain2}).code == 2);
  CHECK(run({"invariance", "--alpha", "1..9", chain5, chain2}).code == 2);
}

TEST_CASE("enumerate") {
  Workspace ws;
  Result r = run({"enumerate", "--n", "3", "--classes"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("order 3: 5 classes (3 connected, 2 disconnected)\n", 0) == 0);
  r = run({"enumerate", "--n", "4"});
  CHECK(r.out.rfind("order 4: 40 matrices", 0) == 0);
  r = run({"enumerate", "--n", "4", "--classes", "--filter", "disconnected",
           "--format", "json", "-o", ws.path("d4.json")});
  CHECK(r.out == "order 4: 6 classes (0 connected, 6 disconnected)\n");
  std::ifstream in(ws.path("d4.json"));
  const json list = json::parse(in);
  REQUIRE(list.size() == 6);
  long labeled = 0;
  for (const auto& item : list) labeled += item["labeled_count"].get<long>();
  r = run({"enumerate", "--n", "4", "--filter", "disconnected"});
  CHECK(r.out.rfind("order 4: " + std::to_string(labeled) + " matrices (0 connected", 0) == 0);
  r = run({"enumerate", "--n", "2", "--json"});
  CHECK(r.out ==
        "{\"connected\":1,\"count\":2,\"disconnected\":1,\"n\":2}\n"
        "2\n10\n01\n\n2\n10\n11\n");
  CHECK(run({"enumerate", "--n", "3", "--filter", "odd"}).code == 2);
  CHECK(run({"enumerate", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--n", "9"}).code == 1);
  CHECK(run({"enumerate", "--n", "0"}).code == 2);
}

TEST_CASE("pascal and hasse") {
  Workspace ws;
  Result r = run({"pascal", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n1000\n1100\n1010\n1111\n");
  r = run({"pascal", "--n", "8", "-o", ws.path("P8.pm")});
  CHECK(r.code == 0);
  CHECK(parse_matrix_file(ws.path("P8.pm")).rows() == 8);
  CHECK(run({"pascal", "--n", "0"}).code == 2);

  const auto a = ws.poset_file("A.pm", "1000;1100;0010;1011");
  r = run({"hasse", a});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "digraph {\n  1;\n  2;\n  3;\n  4;\n  2 -> 1;\n  4 -> 1;\n  4 -> 3;\n}\n");
  CHECK(run({"hasse", a}).out == r.out);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("compose") != std::string::npos);
}

// Copyright 2026 The liepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "liepoly/cli.hpp"

using liepoly::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen") {
  const auto r = call({"gen", "--family", "b2", "--k", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["display"][0] == "x^2 - 2*y - 4");
  CHECK(j["display"][1] == "-2*x^2 + y^2 + 4*y + 4");
  CHECK(j["k"] == 2);
  const auto csv = call({"gen", "--family", "dickson", "--k", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "component,exponents,coefficient\n0,3,1\n0,1,-3\n");
  CHECK(call({"gen", "--family", "lw", "--n", "3", "--k", "2"}).code == 2);  // only n = 2 is symbolic
}

TEST_CASE("perm-test") {
  auto r = call({"perm-test", "--family", "b2", "--k", "7", "--q", "2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["brute"] == true);
  CHECK(j["criterion"] == true);
  CHECK(j["witness"].is_null());
  r = call({"perm-test", "--family", "lw", "--n", "2", "--b", "1", "--k", "5", "--q", "4", "--method", "criterion"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["criterion"] == false);
  CHECK(j["brute"].is_null());
  r = call({"perm-test", "--family", "g2", "--k", "2", "--q", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("family,k,q,", 0) == 0);
  CHECK(call({"perm-test", "--family", "b2", "--k", "2", "--q", "6"}).code == 2);
  CHECK(call({"perm-test", "--family", "b2", "--k", "2"}).code == 2);
}

TEST_CASE("scan") {
  const std::vector<std::string> args = {"scan", "--family", "b2", "--kmax", "3", "--q-list", "2,3", "--jobs", "2"};
  const auto a = call(args), b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out ==
        "family,k,q,brute,criterion,agree,witness_x,witness_y\n"
        "b2,1,2,true,true,true,,\n"
        "b2,1,3,true,true,true,,\n"
        "b2,2,2,true,true,true,,\n"
        "b2,2,3,false,false,true,0,1\n"
        "b2,3,2,false,false,true,0,1\n"
        "b2,3,3,true,true,true,,\n");
  const auto j = call({"scan", "--family", "g2", "--kmin", "2", "--kmax", "2", "--q-list", "5", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["cells"] == 1);
  CHECK(doc["rows"][0]["witness"].size() == 2);
  const auto empty = call({"scan", "--family", "g2", "--kmin", "5", "--kmax", "4", "--q-list", "5"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "family,k,q,brute,criterion,agree,witness_x,witness_y\n");
}

TEST_CASE("fixpoints") {
  CHECK(call({"fixpoints", "--family", "g2", "--k", "5", "--count-only"}).out == "25\n");
  const auto r = call({"fixpoints", "--family", "b2", "--k", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["points"].size() == 4);
  const auto red = call({"fixpoints", "--family", "b2", "--k", "3", "--reduce-q", "3"});
  CHECK(red.code == 0);
  CHECK(call({"fixpoints", "--family", "b2", "--k", "3", "--reduce-q", "3", "--count-only"}).code == 2);
  CHECK(call({"fixpoints", "--family", "b2", "--k", "3", "--format", "csv"}).code == 0);
}

TEST_CASE("frobenius, correspond, region") {
  CHECK(nlohmann::json::parse(call({"frobenius", "--family", "g2", "--q", "4"}).out)["holds"] == true);
  CHECK(call({"frobenius", "--family", "b2", "--q", "3", "--pointwise"}).code == 0);
  CHECK(call({"frobenius", "--family", "b2", "--q", "3", "--pointwise", "--symbolic"}).code == 2);
  const auto c = call({"correspond", "--family", "g2", "--q", "3"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["distinct_images"] == 9);
  const auto reg = call({"region", "--family", "g2", "--samples", "1"});
  CHECK(reg.code == 0);
  CHECK(reg.out.rfind("sigma,tau,x,y,kind\n", 0) == 0);
  CHECK(std::count(reg.out.begin(), reg.out.end(), '\n') == 1 + 1 + 3 * 513);
  CHECK(nlohmann::json::parse(call({"region", "--family", "b2", "--samples", "1", "--format", "json"}).out)["rows"].size() ==
        1 + 3 * 513);
}

TEST_CASE("counterexample") {
  const auto r = call({"counterexample", "--family", "b2", "--pmax", "40"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"gen", "--family", "e8", "--k", "1"}).code == 2);
  CHECK(call({"gen", "--help"}).code == 0);
}

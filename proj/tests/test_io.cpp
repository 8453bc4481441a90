#include "doctest.h"
#include "ietk/errors.hpp"
#include "ietk/golden.hpp"
#include "ietk/io.hpp"

using namespace ietk;
using io::json;

TEST_CASE("permutation round trip") {
  for (const Permutation& p : {tau_sym(5), tau(7), Permutation({2, 1})}) {
    json j = io::to_json(p);
    CHECK(io::permutation_from_json(j) == p);
    CHECK(io::permutation_from_json(json::parse(io::dump(j))) == p);
  }
  CHECK(io::permutation_from_json(json::parse("[3,1,2]")) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(io::permutation_from_json(json::parse(R"({"m": 4, "image": [3,1,2]})")), ValidationError);
  CHECK_THROWS_AS(io::permutation_from_json(json::parse(R"({"image": [1,1,2]})")), ValidationError);
  CHECK_THROWS_AS(io::permutation_from_json(json::parse(R"({"image": "54321"})")), ValidationError);
}

TEST_CASE("path round trip") {
  RauzyPath p = golden::loop();
  RauzyPath q = io::path_from_json(json::parse(io::dump(io::to_json(p))));
  CHECK(q.start == p.start);
  CHECK(q.label_string() == p.label_string());
  CHECK_THROWS_AS(io::path_from_json(json::parse(R"({"start": [2,1], "labels": "abc"})")), ValidationError);
  CHECK_THROWS_AS(io::path_from_json(json::parse(R"({"labels": "ab"})")), ValidationError);
}

TEST_CASE("substitution round trip") {
  Substitution s(5, golden::sigma_images());
  CHECK(io::substitution_from_json(json::parse(io::dump(io::to_json(s)))) == s);
  CHECK_THROWS_AS(io::substitution_from_json(json::parse(R"({"m": 2, "images": {"1": "12"}})")), ValidationError);
  CHECK_THROWS_AS(io::substitution_from_json(json::parse(R"({"m": 2, "images": {"1": "13", "2": "1"}})")),
                  ValidationError);
}

TEST_CASE("IET input kinds") {
  json rational = json::parse(R"({"permutation": [2,1], "lengths": {"kind": "rational", "values": ["1/3", "2/3"]}})");
  IetPair r = io::iet_from_json(rational);
  CHECK(r.perm == Permutation({2, 1}));
  CHECK(r.basis->to_real(r.lengths[0]).exact_value() == mpq_class(1, 3));

  json decimal = json::parse(R"({"permutation": [2,1], "lengths": {"kind": "decimal", "values": ["0.25", "0.75"]}})");
  CHECK(io::iet_from_json(decimal).basis->to_real(io::iet_from_json(decimal).lengths[1]).exact_value() ==
        mpq_class(3, 4));

  json pf = {{"lengths", {{"kind", "pf_eigenvector"}, {"path", io::to_json(golden::loop())}}}};
  IetPair g = io::iet_from_json(pf);
  CHECK(g.perm == tau_sym(5));
  CHECK(induce(g, 12).end.perm == tau_sym(5));
  pf["permutation"] = io::to_json(tau(5));
  CHECK_THROWS_AS(io::iet_from_json(pf), ValidationError);

  CHECK_THROWS_AS(io::iet_from_json(json::parse(R"({"permutation": [2,1], "lengths": {"kind": "float"}})")),
                  ValidationError);
  CHECK_THROWS_AS(
      io::iet_from_json(json::parse(R"({"permutation": [2,1], "lengths": {"kind": "rational", "values": ["x", "1"]}})")),
      ValidationError);
  CHECK_THROWS_AS(
      io::iet_from_json(json::parse(R"({"permutation": [2,1], "lengths": {"kind": "rational", "values": [1, 2]}})")),
      ValidationError);
}

TEST_CASE("IET output reads back within the printed digits") {
  IetPair g = io::iet_from_json({{"lengths", {{"kind", "pf_eigenvector"}, {"path", io::to_json(golden::loop())}}}});
  json out = json::parse(io::dump(io::to_json(g, 40)));
  IetPair back = io::iet_from_json(out);
  CHECK(back.perm == g.perm);
  for (int i = 0; i < 5; ++i) {
    Interval d = (g.basis->to_real(g.lengths[i]) - back.basis->to_real(back.lengths[i])).at(256);
    CHECK(abs(d.lo) < mpq_class(1, 1000000) * mpq_class(1, 1000000) * mpq_class(1, 1000000));
    CHECK(abs(d.hi) < mpq_class(1, 1000000) * mpq_class(1, 1000000) * mpq_class(1, 1000000));
  }
}

TEST_CASE("malformed JSON text is a validation error at the CLI boundary") {
  CHECK_THROWS_AS(io::permutation_from_json(json::parse("{}")), ValidationError);
  CHECK_THROWS_AS(io::iet_from_json(json::parse("[]")), ValidationError);
  CHECK_THROWS_AS(io::substitution_from_json(json::parse(R"({"m": "five"})")), ValidationError);
}

TEST_CASE("dumps are byte-stable") {
  json config = {{"seed", 7}, {"precision_bits", 256}};
  WitnessCertificate c1 = golden_certificate();
  WitnessCertificate c2 = golden_certificate();
  std::string a = io::dump(io::envelope("certificate", config, io::to_json(c1)));
  std::string b = io::dump(io::envelope("certificate", config, io::to_json(c2)));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  json j = json::parse(a);
  CHECK(j["schema"] == "ietk.certificate");
  CHECK(j["version"] == io::kSchemaVersion);
  CHECK(j["config"]["seed"] == 7);
  // re-dumping the parsed document gives the same bytes
  CHECK(io::dump(j) == a);
}

TEST_CASE("decimal output of certified reals") {
  CHECK(io::to_json(CertifiedReal(mpq_class(1, 4)), 5).get<std::string>().rfind("0.25", 0) == 0);
  std::string s = io::to_json(sqrt(CertifiedReal(2)), 20).get<std::string>();
  CHECK(s.rfind("1.41421356237309504", 0) == 0);
  // refining the value first does not change the printed digits
  CertifiedReal r = sqrt(CertifiedReal(3));
  std::string before = io::to_json(r, 25).get<std::string>();
  (void)r.at(2000);
  CHECK(io::to_json(r, 25).get<std::string>() == before);
}

#include "ietk/io.hpp"

#include "ietk/errors.hpp"

namespace ietk::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

json vec_json(const IntVector& v) { return json(v); }

json reals_json(const std::vector<CertifiedReal>& v, int digits) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x, digits));
  return a;
}

}  // namespace

json envelope(const std::string& kind, const json& config, json payload) {
  payload["schema"] = "ietk." + kind;
  payload["version"] = kSchemaVersion;
  payload["tool"] = kToolVersion;
  payload["config"] = config;
  return payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Permutation& p) { return {{"m", p.size()}, {"image", p.image()}}; }

Permutation permutation_from_json(const json& j) {
  try {
    const json& img = j.is_array() ? j : field(j, "image");
    auto image = img.get<std::vector<int>>();
    if (j.is_object() && j.contains("m") && j.at("m").get<int>() != static_cast<int>(image.size()))
      throw ValidationError("permutation JSON: m does not match the image length");
    return Permutation(std::move(image));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("permutation JSON: ") + e.what());
  }
}

json to_json(const RauzyPath& p) { return {{"start", to_json(p.start)}, {"labels", p.label_string()}}; }

RauzyPath path_from_json(const json& j) {
  try {
    return RauzyPath(permutation_from_json(field(j, "start")), field(j, "labels").get<std::string>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("path JSON: ") + e.what());
  }
}

json to_json(const IntMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return rows;
}

json to_json(const Word& w) { return to_string(w); }

json to_json(const CertifiedReal& x, int digits) {
  // Enough bits for the printed digits plus a margin, so the output does not
  // depend on how far the value was refined before.
  int bits = static_cast<int>(digits * 3.33) + 32;
  return x.refined(bits).to_decimal(digits);
}

IetPair iet_from_json(const json& j, int precision_bits, int max_bits) {
  try {
    const json& len = field(j, "lengths");
    std::string kind = field(len, "kind").get<std::string>();
    if (kind == "pf_eigenvector") {
      RauzyPath path = path_from_json(field(len, "path"));
      IetPair t = periodic_iet_from_path(path, precision_bits, max_bits).iet.pair();
      if (j.contains("permutation") && !(permutation_from_json(j.at("permutation")) == t.perm))
        throw ValidationError("IET JSON: permutation differs from the path start");
      return t;
    }
    if (kind != "rational" && kind != "decimal") throw ValidationError("IET JSON: unknown lengths kind " + kind);
    Permutation p = permutation_from_json(field(j, "permutation"));
    std::vector<CertifiedReal> values;
    for (const auto& v : field(len, "values")) values.push_back(CertifiedReal::parse(v.get<std::string>()));
    return make_iet(std::move(values), std::move(p), {}, max_bits);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("IET JSON: ") + e.what());
  }
}

json to_json(const IetPair& t, int digits) {
  std::vector<CertifiedReal> lengths;
  for (const auto& f : t.lengths) lengths.push_back(t.basis->to_real(f));
  return {{"permutation", to_json(t.perm)},
          {"lengths", {{"kind", "decimal"}, {"digits", digits}, {"values", reals_json(lengths, digits)}}},
          {"total", to_json(t.basis->to_real(t.total()), digits)}};
}

json to_json(const Substitution& s) {
  json images = json::object();
  for (int i = 1; i <= s.m(); ++i) images[std::to_string(i)] = to_string(s.image(i));
  return {{"m", s.m()}, {"images", images}};
}

Substitution substitution_from_json(const json& j) {
  try {
    int m = field(j, "m").get<int>();
    const json& images = field(j, "images");
    std::vector<Word> w;
    for (int i = 1; i <= m; ++i) w.push_back(parse_word(field(images, std::to_string(i).c_str()).get<std::string>()));
    return Substitution(m, std::move(w));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("substitution JSON: ") + e.what());
  }
}

json to_json(const WitnessPair& w, int m) {
  return {{"w1", to_string(w.w1)},
          {"w2", to_string(w.w2)},
          {"l_w1", vec_json(population(w.w1, m))},
          {"l_w2", vec_json(population(w.w2, m))},
          {"S", w.set.members},
          {"b", vec_json(w.b)}};
}

json to_json(const std::vector<Check>& checks) { return checks_json(checks); }

json to_json(const WitnessCertificate& c) {
  int m = c.iet.m();
  return {{"iet", to_json(c.iet)},
          {"provenance", c.provenance},
          {"w1", to_string(c.w1)},
          {"w2", to_string(c.w2)},
          {"l_w1", vec_json(population(c.w1, m))},
          {"l_w2", vec_json(population(c.w2, m))},
          {"S", c.set.members},
          {"b", vec_json(c.b)},
          {"verified", c.verified()},
          {"transcript", checks_json(c.transcript)},
          {"stages", checks_json(c.stages)}};
}

json to_json(const TowerDiagnostics& d) {
  json sets = json::array();
  for (std::size_t r = 0; r < d.sets.size(); ++r) {
    const TowerSet& s = d.sets[r];
    json e = {{"r", r + 1},
              {"height", s.height},
              {"q", s.q},
              {"interval_length", to_json(s.interval_length, 20)},
              {"measure", to_json(s.measure, 20)},
              {"measure_ok", s.measure_ok},
              {"sup_displacement", to_json(s.displacement_abs, 20)},
              {"delta_w0_length", to_json(s.delta_w0_length, 20)},
              {"displacement_ok", s.displacement_ok},
              {"boundary_measure", to_json(s.boundary, 20)},
              {"boundary_ok", s.boundary_ok}};
    if (d.has_ratio) {
      e["displacement_ratio"] = to_json(d.displacement_ratio[r], 20);
      e["interval_ratio"] = to_json(d.interval_ratio[r], 20);
    }
    sets.push_back(std::move(e));
  }
  json j = {{"depth", d.depth},
            {"heights", vec_json(d.heights)},
            {"alpha", to_json(d.alpha, 20)},
            {"rho_total", to_json(d.rho_total, 20)},
            {"sets", sets},
            {"ok", d.ok()}};
  if (d.has_ratio) {
    j["expected_ratio"] = to_json(d.expected_ratio, 20);
    j["ratio_ok"] = d.ratio_ok;
  }
  return j;
}

json to_json(const CocycleReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"r", s.r},
                       {"level", s.level},
                       {"population", vec_json(s.population)},
                       {"birkhoff", to_json(s.birkhoff, 20)},
                       {"matches", s.matches},
                       {"returns", s.returns}});
  return {{"depth", r.depth},
          {"q", r.q},
          {"a", reals_json(r.a, 20)},
          {"a1_minus_a2", to_json(r.difference, 20)},
          {"expected_difference", to_json(r.expected_difference, 20)},
          {"difference_ok", r.difference_ok},
          {"samples", samples},
          {"ok", r.ok()}};
}

json to_json(const TowerPartition& p) {
  return {{"depth", p.depth},
          {"levels", p.levels},
          {"first_return", p.first_return},
          {"disjoint_fill", p.disjoint_fill},
          {"total_identity", p.total_identity},
          {"ok", p.ok()}};
}

}  // namespace ietk::io

#include "witness_json.hpp"

#include <stdexcept>

namespace epiwit {

namespace {

json root_to_json(const RootVec& r) { return json(r); }

RootVec root_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("root must be an array of integers");
  RootVec r;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError("root entries must be integers");
    r.push_back(v.get<int>());
  }
  return r;
}

json group_to_json(const UnipGroupW& g) {
  json fs = json::array();
  for (const auto& f : g.factors)
    fs.push_back({{"root", root_to_json(f.root)},
                  {"coeff", f.coeff},
                  {"mult", f.mult},
                  {"pexp", f.pexp}});
  return {{"name", g.name}, {"factors", fs}};
}

UnipGroupW group_from_json(const json& j) {
  UnipGroupW g;
  g.name = j.at("name").get<std::string>();
  for (const auto& f : j.at("factors")) {
    UnipFactorW u;
    u.root = root_from_json(f.at("root"));
    u.coeff = f.at("coeff").get<long long>();
    u.mult = f.at("mult").get<long long>();
    u.pexp = f.at("pexp").get<long long>();
    g.factors.push_back(u);
  }
  return g;
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("malformed field: ") + key);
  }
}

}  // namespace

json cert_to_json(const Certificate& c) {
  json j;
  j["schema_version"] = c.schema_version;
  j["type"] = std::string(1, c.type);
  j["rank"] = c.rank;
  j["p"] = c.p;
  j["a"] = c.a;
  j["case_tag"] = c.case_tag;
  json coch = json::array();
  for (const auto& f : c.cochar) {
    json crs = json::array();
    for (const auto& cr : f.coroots)
      crs.push_back({{"root", root_to_json(cr.root)}, {"coeff", cr.coeff}});
    coch.push_back({{"coroots", crs}, {"pexp", f.pexp}});
  }
  j["cochar"] = coch;
  json jg = json::array(), yg = json::array(), zg = json::array();
  for (const auto& g : c.j_unip) jg.push_back(group_to_json(g));
  for (const auto& g : c.y_groups) yg.push_back(group_to_json(g));
  for (const auto& g : c.z_groups) zg.push_back(group_to_json(g));
  j["j_unip"] = jg;
  j["y_groups"] = yg;
  j["z_groups"] = zg;
  j["claimed_dim"] = c.claimed_dim;
  j["family"] = torus_family_to_string(c.family);
  json subs = json::array();
  for (const auto& s : c.subsystems) {
    json seeds = json::array();
    for (const auto& r : s.seeds) seeds.push_back(root_to_json(r));
    subs.push_back({{"name", s.name}, {"seeds", seeds}, {"expected_type", s.expected_type}});
  }
  j["subsystems"] = subs;
  json mem = json::array();
  for (const auto& m : c.memberships)
    mem.push_back({{"root", root_to_json(m.root)},
                   {"subsystem", m.subsystem},
                   {"inside", m.inside}});
  j["memberships"] = mem;
  json hw = json::array();
  for (const auto& h : c.hw_claims)
    hw.push_back({{"root", root_to_json(h.root)}, {"subsystem", h.subsystem}});
  j["hw_claims"] = hw;
  json jor = json::array();
  for (const auto& jc : c.jordan_claims)
    jor.push_back({{"root", root_to_json(jc.root)}, {"blocks", jc.blocks}});
  j["jordan_claims"] = jor;
  j["annotations"] = c.annotations;
  j["classical_model"] = c.classical_model;
  j["ad_target"] = c.ad_target;
  json seeds = json::array();
  for (const auto& r : c.ad_seeds) seeds.push_back(root_to_json(r));
  j["ad_seeds"] = seeds;
  j["field_exp"] = c.field_exp;
  j["seed"] = c.seed;
  return j;
}

Certificate cert_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("certificate must be a JSON object");
  Certificate c;
  c.schema_version = get_field<int>(j, "schema_version");
  if (c.schema_version != 1) throw SchemaError("unsupported schema_version");
  auto ty = get_field<std::string>(j, "type");
  if (ty.size() != 1 || ty[0] < 'A' || ty[0] > 'G') throw SchemaError("malformed field: type");
  c.type = ty[0];
  c.rank = get_field<int>(j, "rank");
  c.p = get_field<long long>(j, "p");
  c.a = get_field<long long>(j, "a");
  c.case_tag = get_field<std::string>(j, "case_tag");
  if (!j.contains("cochar") || !j.at("cochar").is_array())
    throw SchemaError("missing field: cochar");
  try {
    for (const auto& f : j.at("cochar")) {
      CochFactorW cf;
      for (const auto& cr : f.at("coroots"))
        cf.coroots.push_back({root_from_json(cr.at("root")), cr.at("coeff").get<long long>()});
      cf.pexp = f.at("pexp").get<long long>();
      c.cochar.push_back(cf);
    }
    for (const auto& g : j.at("j_unip")) c.j_unip.push_back(group_from_json(g));
    for (const auto& g : j.at("y_groups")) c.y_groups.push_back(group_from_json(g));
    for (const auto& g : j.at("z_groups")) c.z_groups.push_back(group_from_json(g));
    c.claimed_dim = get_field<int>(j, "claimed_dim");
    c.family = torus_family_from_string(get_field<std::string>(j, "family"));
    for (const auto& s : j.at("subsystems")) {
      SubsystemSpec sp;
      sp.name = s.at("name").get<std::string>();
      for (const auto& r : s.at("seeds")) sp.seeds.push_back(root_from_json(r));
      sp.expected_type = s.at("expected_type").get<std::string>();
      c.subsystems.push_back(sp);
    }
    for (const auto& m : j.at("memberships"))
      c.memberships.push_back({root_from_json(m.at("root")),
                               m.at("subsystem").get<std::string>(),
                               m.at("inside").get<bool>()});
    for (const auto& h : j.at("hw_claims"))
      c.hw_claims.push_back(
          {root_from_json(h.at("root")), h.at("subsystem").get<std::string>()});
    for (const auto& jc : j.at("jordan_claims"))
      c.jordan_claims.push_back(
          {root_from_json(jc.at("root")), jc.at("blocks").get<std::vector<int>>()});
    c.annotations = j.at("annotations").get<std::vector<std::string>>();
    c.classical_model = get_field<bool>(j, "classical_model");
    c.ad_target = get_field<int>(j, "ad_target");
    for (const auto& r : j.at("ad_seeds")) c.ad_seeds.push_back(root_from_json(r));
    c.field_exp = get_field<long long>(j, "field_exp");
    c.seed = get_field<long long>(j, "seed");
  } catch (const SchemaError&) {
    throw;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

json report_to_json(const Report& r) {
  json j;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  json cs = json::array();
  for (const auto& c : r.checks)
    cs.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["checks"] = cs;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace epiwit

#include "smale/io.hpp"

namespace smale {

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& text, const Enum (&values)[N], const char* what) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  raise(ErrorCode::Parse, std::string("unknown ") + what + " '" + text + "'");
}

Json band_json(const FiniteOrder& order, const BandRef& b) { return {order.name(b.owner), b.index}; }

Json pair_json(const FiniteOrder& order, const GluedPair& p) {
  return {{"attractor", band_json(order, p.attractor_band)}, {"repeller", band_json(order, p.repeller_band)}};
}

Json step_json(const RepairStep& s) {
  return {{"trick", to_string(s.trick)},
          {"cycle_length", s.cycle_length},
          {"before", s.before.lengths()},
          {"after", s.after.lengths()}};
}

class Reader {
 public:
  explicit Reader(const FiniteOrder& order) : order_(order) {}

  ElementId id(const Json& j) const {
    const std::string name = j.get<std::string>();
    auto found = order_.find(name);
    if (!found) raise(ErrorCode::Parse, "unknown element '" + name + "' in certificate");
    return *found;
  }
  std::vector<ElementId> ids(const Json& j) const {
    std::vector<ElementId> out;
    for (const auto& x : j) out.push_back(id(x));
    return out;
  }
  BandRef band(const Json& j) const { return {id(j.at(0)), j.at(1).get<std::size_t>()}; }
  GluedPair pair(const Json& j) const { return {band(j.at("attractor")), band(j.at("repeller"))}; }
  RepairStep step(const Json& j) const {
    RepairStep s;
    s.trick = parse_enum(j.at("trick").get<std::string>(), {RepairTrick::Lengthen, RepairTrick::SplitCycle}, "trick");
    s.cycle_length = j.at("cycle_length").get<std::size_t>();
    s.before = LengthProfile(j.at("before").get<std::vector<std::size_t>>());
    s.after = LengthProfile(j.at("after").get<std::vector<std::size_t>>());
    return s;
  }

 private:
  const FiniteOrder& order_;
};

}  // namespace

Json certificate_json(const RealizationCertificate& cert) {
  const FiniteOrder& order = cert.order;
  const RoleMap roles = classify(order);
  Json doc;
  doc["schema"] = certificate_schema;
  doc["tool"] = {{"name", "smale"}, {"version", SMALE_VERSION_STRING}};
  doc["strategy"] = {{"cycles", cert.cycles_supplied ? "supplied" : "eulerian-doubling"},
                     {"balancing", "splice-at-least-rotation"},
                     {"matching", to_string(cert.strategy)},
                     {"repair", "lengthen-then-split"},
                     {"handles", "cover-pairs"}};

  Json relations = Json::array();
  for (const auto& [a, b] : order.cover_pairs()) relations.push_back({order.name(a), order.name(b)});
  doc["order"] = {{"elements", order.names()}, {"relations", std::move(relations)}};

  Json role_map = Json::object();
  for (ElementId id : order.elements()) {
    Json r = {{"role", to_string(roles.role(id))}};
    if (roles.role(id) == Role::Saddle) r["generation"] = roles.generation(id);
    role_map[order.name(id)] = std::move(r);
  }
  doc["roles"] = std::move(role_map);

  Json ns = Json::array();
  for (const auto& [a, b] : cert.north_south) ns.push_back({order.name(a), order.name(b)});
  doc["north_south"] = std::move(ns);
  doc["balance_splices"] = cert.balance_splices;

  Json cycles = Json::object();
  for (const auto& [owner, word] : cert.assignment.cycles) {
    Json w = Json::array();
    for (const auto& t : word) w.push_back({order.name(t.left), order.name(t.mediator), order.name(t.right)});
    cycles[order.name(owner)] = std::move(w);
  }
  doc["cycles"] = std::move(cycles);

  Json gluing = Json::array();
  for (const auto& p : cert.gluing.pairs) gluing.push_back(pair_json(order, p));
  doc["gluing"] = std::move(gluing);

  Json boundaries = Json::object();
  for (const auto& [s, list] : cert.boundaries) {
    Json cs = Json::array();
    for (const auto& c : list) {
      Json seq = Json::array();
      for (const auto& b : c.sequence) seq.push_back(band_json(order, b));
      cs.push_back({{"length", c.length()}, {"sequence", std::move(seq)}});
    }
    boundaries[order.name(s)] = std::move(cs);
  }
  doc["boundaries"] = std::move(boundaries);

  Json domains = Json::object();
  for (const auto& [s, d] : cert.domains) {
    Json repairs = Json::array();
    for (const auto& step : d.repairs.steps) repairs.push_back(step_json(step));
    Json surgeries = Json::array();
    for (const auto& rec : d.surgeries) {
      Json inserted = Json::array();
      for (const auto& p : rec.inserted) inserted.push_back(pair_json(order, p));
      surgeries.push_back(
          {{"trick", to_string(rec.trick)}, {"cycle_length", rec.cycle_length}, {"inserted", std::move(inserted)}});
    }
    domains[order.name(s)] = {{"traced_profile", d.traced_profile.lengths()},
                              {"profile", d.spec.profile.lengths()},
                              {"genus", d.spec.genus},
                              {"recipe",
                               {{"kind", to_string(d.spec.recipe.kind)},
                                {"singularity_prongs", d.spec.recipe.singularity_prongs},
                                {"saddle_da_count", d.spec.recipe.saddle_da_count}}},
                              {"repairs", std::move(repairs)},
                              {"surgeries", std::move(surgeries)}};
  }
  doc["domains"] = std::move(domains);

  Json handles = Json::array();
  for (const auto& h : cert.handles) {
    handles.push_back({{"greater", order.name(h.greater)}, {"lesser", order.name(h.lesser)}, {"steps", h.steps}});
  }
  doc["handles"] = std::move(handles);

  doc["counts"] = {{"vertices", cert.vertices},
                   {"edges", cert.edges},
                   {"handles", cert.handle_count},
                   {"domain_euler_sum", cert.domain_euler_sum},
                   {"euler_characteristic", cert.euler_characteristic},
                   {"genus", cert.genus}};

  Json components = Json::array();
  for (const auto& c : cert.components) {
    Json names = Json::array();
    for (ElementId id : c.elements) names.push_back(order.name(id));
    components.push_back({{"elements", std::move(names)},
                          {"euler_characteristic", c.euler_characteristic},
                          {"genus", c.genus},
                          {"north_south", c.north_south}});
  }
  doc["components"] = std::move(components);
  doc["connected"] = cert.connected();
  doc["notes"] = cert.notes;
  return doc;
}

RealizationCertificate certificate_from_json(const Json& doc) {
  try {
    if (!doc.is_object() || doc.value("schema", "") != certificate_schema) {
      raise(ErrorCode::Parse, "not a " + std::string(certificate_schema) + " document");
    }
    RealizationCertificate cert;
    OrderSpec spec;
    spec.elements = doc.at("order").at("elements").get<std::vector<std::string>>();
    for (const auto& r : doc.at("order").at("relations")) {
      spec.relations.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
    }
    cert.order = FiniteOrder::load(spec);
    const Reader read(cert.order);

    const auto strategy = parse_matching_strategy(doc.at("strategy").at("matching").get<std::string>());
    if (!strategy) raise(ErrorCode::Parse, "unknown matching strategy");
    cert.strategy = *strategy;
    cert.cycles_supplied = doc.at("strategy").at("cycles").get<std::string>() == "supplied";
    cert.balance_splices = doc.at("balance_splices").get<std::size_t>();

    for (const auto& p : doc.at("north_south")) cert.north_south.emplace_back(read.id(p.at(0)), read.id(p.at(1)));

    for (const auto& [owner, word] : doc.at("cycles").items()) {
      CyclicWord& w = cert.assignment.cycles[read.id(Json(owner))];
      for (const auto& t : word) w.push_back({read.id(t.at(0)), read.id(t.at(1)), read.id(t.at(2))});
    }
    for (const auto& p : doc.at("gluing")) cert.gluing.pairs.push_back(read.pair(p));

    for (const auto& [s, list] : doc.at("boundaries").items()) {
      const ElementId saddle = read.id(Json(s));
      auto& cycles = cert.boundaries[saddle];
      for (const auto& c : list) {
        BoundaryCycle cycle{saddle, {}};
        for (const auto& b : c.at("sequence")) cycle.sequence.push_back(read.band(b));
        cycles.push_back(std::move(cycle));
      }
    }

    for (const auto& [s, d] : doc.at("domains").items()) {
      SaddleDomain domain;
      domain.saddle = read.id(Json(s));
      domain.traced_profile = LengthProfile(d.at("traced_profile").get<std::vector<std::size_t>>());
      domain.spec.profile = LengthProfile(d.at("profile").get<std::vector<std::size_t>>());
      domain.spec.genus = d.at("genus").get<std::size_t>();
      const Json& recipe = d.at("recipe");
      domain.spec.recipe.kind = parse_enum(
          recipe.at("kind").get<std::string>(),
          {RecipeKind::PrimitiveHorseshoe, RecipeKind::PrimitiveFixedSaddle, RecipeKind::PseudoAnosovDA}, "recipe");
      domain.spec.recipe.singularity_prongs = recipe.at("singularity_prongs").get<std::vector<std::size_t>>();
      domain.spec.recipe.saddle_da_count = recipe.at("saddle_da_count").get<std::size_t>();
      for (const auto& step : d.at("repairs")) domain.repairs.steps.push_back(read.step(step));
      for (const auto& rec : d.at("surgeries")) {
        SurgeryRecord r;
        r.saddle = domain.saddle;
        r.trick = parse_enum(rec.at("trick").get<std::string>(), {RepairTrick::Lengthen, RepairTrick::SplitCycle},
                             "trick");
        r.cycle_length = rec.at("cycle_length").get<std::size_t>();
        for (const auto& p : rec.at("inserted")) r.inserted.push_back(read.pair(p));
        domain.surgeries.push_back(std::move(r));
      }
      cert.domains.emplace(domain.saddle, std::move(domain));
    }

    for (const auto& h : doc.at("handles")) {
      cert.handles.push_back(
          {read.id(h.at("greater")), read.id(h.at("lesser")), h.at("steps").get<std::vector<std::string>>()});
    }

    const Json& counts = doc.at("counts");
    cert.vertices = counts.at("vertices").get<std::size_t>();
    cert.edges = counts.at("edges").get<std::size_t>();
    cert.handle_count = counts.at("handles").get<std::size_t>();
    cert.domain_euler_sum = counts.at("domain_euler_sum").get<long long>();
    cert.euler_characteristic = counts.at("euler_characteristic").get<long long>();
    cert.genus = counts.at("genus").get<std::size_t>();

    for (const auto& c : doc.at("components")) {
      cert.components.push_back({read.ids(c.at("elements")), c.at("euler_characteristic").get<long long>(),
                                 c.at("genus").get<std::size_t>(), c.at("north_south").get<bool>()});
    }
    cert.notes = doc.at("notes").get<std::vector<std::string>>();
    return cert;
  } catch (const Json::exception& e) {
    raise(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace smale

#include "chowgen/serialize.hpp"

#include "chowgen/error.hpp"

namespace chowgen {

using nlohmann::ordered_json;

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::O, Family::SO_odd, Family::GL2, Family::SL2n, Family::HilbertEven, Family::HilbertOdd,
                   Family::HilbertRational})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

ordered_json to_json(const PresentationDocument& doc) {
  const Presentation& p = doc.presentation;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = doc.spec ? ordered_json(family_name(doc.spec->family)) : ordered_json(nullptr);
  j["parameter"] = doc.spec ? ordered_json(doc.spec->parameter) : ordered_json(nullptr);
  j["simplified"] = doc.simplified;
  ordered_json gens = ordered_json::array();
  for (const auto& v : p.ring().variables()) gens.push_back({{"name", v.name}, {"weight", v.weight}});
  j["ring"] = {{"generators", gens}};
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.relations())
    rels.push_back({{"label", r.label}, {"degree", r.poly.degree()}, {"poly", to_string(r.poly)}});
  j["relations"] = rels;
  j["provenance"] = p.provenance();
  j["notes"] = p.notes();
  j["display"] = render_presentation(p);
  return j;
}

PresentationDocument presentation_from_json(const ordered_json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw InvalidArgument("unsupported schema_version " + j.at("schema_version").dump());
    std::vector<Variable> vars;
    for (const auto& g : j.at("ring").at("generators"))
      vars.push_back({g.at("name").get<std::string>(), g.at("weight").get<int>()});
    const GradedRingSpec ring(std::move(vars));
    std::vector<Relation> rels;
    for (const auto& r : j.at("relations")) {
      Polynomial poly = parse_polynomial(ring, r.at("poly").get<std::string>());
      if (poly.degree() != r.at("degree").get<int>())
        throw InvalidArgument("relation '" + r.at("label").get<std::string>() + "' has the wrong degree");
      rels.push_back({r.at("label").get<std::string>(), std::move(poly)});
    }
    PresentationDocument doc{Presentation(ring, std::move(rels), j.at("provenance").get<std::string>()), std::nullopt,
                             j.at("simplified").get<bool>()};
    if (j.contains("notes"))
      for (const auto& n : j.at("notes")) doc.presentation.add_note(n.get<std::string>());
    if (!j.at("family").is_null()) {
      const auto f = family_from_name(j.at("family").get<std::string>());
      if (!f) throw InvalidArgument("unknown family " + j.at("family").dump());
      doc.spec = GroupSpec{*f, j.at("parameter").get<int>()};
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed presentation document: ") + e.what());
  }
}

ordered_json to_json(const GradedAbelianGroup& g) {
  ordered_json degrees = ordered_json::array();
  for (std::size_t n = 0; n < g.degrees.size(); ++n) {
    ordered_json torsion = ordered_json::array();
    for (const auto& t : g.degrees[n].torsion) torsion.push_back(t.get_str());
    degrees.push_back({{"degree", n},
                       {"free_rank", g.degrees[n].free_rank},
                       {"torsion", torsion},
                       {"group", g.degrees[n].to_string()}});
  }
  return {{"schema_version", kSchemaVersion}, {"degrees", degrees}, {"display", g.to_string()}};
}

ordered_json to_json(const ChernSeries& s) {
  ordered_json comps = ordered_json::array();
  for (int i = 0; i <= s.trunc(); ++i) comps.push_back(to_string(s.component(i)));
  return {{"schema_version", kSchemaVersion},
          {"rank", s.rank()},
          {"trunc", s.trunc()},
          {"components", comps},
          {"series", to_string(s.series())}};
}

}  // namespace chowgen

#pragma once

// JSON serialization of library results.  Key order is fixed so that
// identical invocations produce byte-identical output; wall time never
// enters the verdict body, only the outer envelope.

#include <string>

#include "json.hpp"

#include "homs.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "version.hpp"

namespace braidframe {

using json = nlohmann::ordered_json;

inline json h1_to_json(const H1Invariants& h) {
  json torsion = json::array();
  for (const Int& t : h.torsion)
    torsion.push_back(t.convert_to<long long>());
  return json{{"free_rank", h.free_rank}, {"torsion", torsion}};
}

inline json audit_to_json(const AuditReport& rep) {
  json failures = json::array();
  for (const AuditCheck& f : rep.failures()) {
    failures.push_back(json{{"check", f.name},
                            {"witness", f.witness},
                            {"command", f.command}});
  }
  json out{{"hom", rep.hom},
           {"checker", rep.checker},
           {"relators_checked", rep.checked()},
           {"failures", failures},
           {"verdict", rep.verdict()}};
  if (rep.experimental) out["experimental"] = true;
  return out;
}

inline json presentation_to_json(const GroupPresentation& p) {
  json gens = json::array();
  for (const GeneratorId& id : p.generators())
    gens.push_back(generator_name(id));
  json rels = json::array();
  for (const Relator& r : p.relators())
    rels.push_back(json{{"label", r.label()}, {"word", format_word(r.word)}});
  return json{{"name", p.name()},
              {"params", json{{"g", p.alphabet().g},
                              {"b", p.alphabet().b},
                              {"n", p.alphabet().n}}},
              {"generators", gens},
              {"relators", rels}};
}

// Outer envelope shared by all JSON-emitting commands.
inline json report_envelope(const std::string& command, const json& params,
                            const json& result, long long wall_ms) {
  return json{{"schema", 1},
              {"tool", "braidframe"},
              {"version", BRAIDFRAME_VERSION},
              {"command", command},
              {"params", params},
              {"result", result},
              {"wall_ms", wall_ms}};
}

}  // namespace braidframe

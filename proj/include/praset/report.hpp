#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "praset/attacks.hpp"
#include "praset/core.hpp"
#include "praset/parser.hpp"
#include "praset/principles.hpp"
#include "praset/program.hpp"
#include "praset/semantics.hpp"
#include "praset/structures.hpp"

namespace praset {

using Json = nlohmann::ordered_json;

// FNV-1a over the source text; identifies a program in reports.
inline std::string digest(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string render_structure(const Program& p, ArgStructure a) {
  std::string out = "<{" + render_obj_mask(p, a.y) + "} <- {" + render_obj_mask(p, a.x, true) + "}";
  if (a.z != 0) out += "; {" + render_obj_mask(p, a.z) + "}";
  return out + ">";
}

inline std::string render_answer_set(const Program& p, AnswerSet s) {
  return "{" + render_obj_mask(p, s.pos) + "}";
}

namespace detail {

inline std::string render_justification(const Program& p, const Derivation& d, std::size_t i) {
  const DerivStep& st = d.steps[i];
  switch (st.kind) {
    case DerivStep::Kind::Basic:
      return "Basic(" + p.rules[static_cast<std::size_t>(st.rule)].name + ")";
    case DerivStep::Kind::Unfold:
      return "R1(" + std::to_string(st.from1 + 1) + "," + std::to_string(st.from2 + 1) + ")";
    case DerivStep::Kind::Union:
      return "R2(" + std::to_string(st.from1 + 1) + "," + std::to_string(st.from2 + 1) + ")";
    case DerivStep::Kind::Extend:
      return "R3(" + std::to_string(st.from1 + 1) + ", {" + render_obj_mask(p, st.w, true) +
             "})";
  }
  return "?";
}

inline const char* step_tag(const DerivStep& st) {
  switch (st.kind) {
    case DerivStep::Kind::Basic: return "Basic";
    case DerivStep::Kind::Unfold: return "R1";
    case DerivStep::Kind::Union: return "R2";
    case DerivStep::Kind::Extend: return "R3";
  }
  return "?";
}

inline Json structure_json(const Program& p, ArgStructure a) {
  Json j;
  Json y = Json::array(), x = Json::array(), z = Json::array();
  for (int i = 0; i < p.obj_count(); ++i) {
    if (a.y & bit(i)) y.push_back(render(p, ObjLit{i}));
    if (a.x & bit(i)) x.push_back("not " + render(p, ObjLit{i}));
    if (a.z & bit(i)) z.push_back(render(p, ObjLit{i}));
  }
  j["y"] = y;
  j["x"] = x;
  j["z"] = z;
  return j;
}

inline Json chain_json(const Program& p, const BlockInfo& b) {
  Json arr = Json::array();
  for (const AttackStep& st : b.chain) {
    Json e;
    e["tag"] = qrule_name(st.rule);
    e["attacker"] = structure_json(p, st.attacker);
    e["attacked"] = structure_json(p, st.attacked);
    arr.push_back(e);
  }
  return arr;
}

inline Json derivation_json(const Program& p, const DerivationVerdict& v) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < v.derivation.steps.size(); ++i) {
    Json st;
    st["tag"] = step_tag(v.derivation.steps[i]);
    st["justification"] = render_justification(p, v.derivation, i);
    st["structure"] = structure_json(p, v.derivation.steps[i].s);
    steps.push_back(st);
  }
  Json j;
  j["rules"] = Json::array();
  for (RuleMask m = v.derivation.gen_rules; m;) {
    int r = lowest_bit(m);
    m &= m - 1;
    j["rules"].push_back(p.rules[static_cast<std::size_t>(r)].name);
  }
  j["steps"] = steps;
  j["blocked"] = v.block.blocked;
  if (v.block.blocked) j["blocking_attack"] = chain_json(p, v.block);
  return j;
}

}  // namespace detail

// ---- solve ----

inline std::string solve_text(const Program& p, const Analysis& a, bool total) {
  std::ostringstream out;
  out << a.sets.size() << (a.sets.size() == 1 ? " answer set\n" : " answer sets\n");
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    out << "[" << i + 1 << "] " << render_answer_set(p, a.sets[i]);
    if (total) out << " not: {" << render_obj_mask(p, answer_set_neg(p, a.sets[i])) << "}";
    out << "\n";
  }
  std::size_t npref = 0;
  for (char f : a.preferred) npref += f != 0;
  out << npref << (npref == 1 ? " preferred answer set\n" : " preferred answer sets\n");
  for (std::size_t i = 0; i < a.sets.size(); ++i)
    if (a.preferred[i]) out << "[" << i + 1 << "] " << render_answer_set(p, a.sets[i]) << "\n";
  if (!a.closure.stable) out << "note: attack closure is unstable (possible exceeds definite)\n";
  return out.str();
}

inline Json solve_json(const Program& p, const Analysis& a, std::string_view source, bool total) {
  Json j;
  j["schema"] = 1;
  j["digest"] = digest(source);
  Json sets = Json::array();
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    Json s;
    Json lits = Json::array();
    for (int l = 0; l < p.obj_count(); ++l)
      if (a.sets[i].pos & bit(l)) lits.push_back(render(p, ObjLit{l}));
    s["literals"] = lits;
    if (total) {
      Json neg = Json::array();
      Mask nm = answer_set_neg(p, a.sets[i]);
      for (int l = 0; l < p.obj_count(); ++l)
        if (nm & bit(l)) neg.push_back("not " + render(p, ObjLit{l}));
      s["default"] = neg;
    }
    s["preferred"] = a.preferred[i] != 0;
    Json derivs = Json::array();
    for (const DerivationVerdict& v : a.verdicts[i]) derivs.push_back(detail::derivation_json(p, v));
    s["derivations"] = derivs;
    sets.push_back(s);
  }
  j["answer_sets"] = sets;
  j["stable"] = a.closure.stable;
  return j;
}

// ---- explain ----

inline std::string explain_text(const Program& p, const Analysis& a, std::size_t which) {
  std::ostringstream out;
  out << "answer set [" << which + 1 << "] " << render_answer_set(p, a.sets[which]) << "\n";
  const auto& verdicts = a.verdicts[which];
  for (std::size_t d = 0; d < verdicts.size(); ++d) {
    const DerivationVerdict& v = verdicts[d];
    out << "derivation " << d + 1 << " of " << verdicts.size() << ": "
        << (v.block.blocked ? "blocked" : "warranted") << "\n";
    for (std::size_t i = 0; i < v.derivation.steps.size(); ++i)
      out << "  [" << i + 1 << "] " << detail::render_justification(p, v.derivation, i) << " "
          << render_structure(p, v.derivation.steps[i].s) << "\n";
    if (v.block.blocked) {
      out << "  blocking attack derivation:\n";
      for (std::size_t i = 0; i < v.block.chain.size(); ++i) {
        const AttackStep& st = v.block.chain[i];
        out << "    [" << i + 1 << "] " << qrule_name(st.rule) << " ("
            << render_structure(p, st.attacker) << ", " << render_structure(p, st.attacked)
            << ")\n";
      }
      const AttackStep& last = v.block.chain.back();
      out << "  blocker " << render_structure(p, last.attacker) << " is complete\n";
    }
  }
  bool pref = a.preferred[which] != 0;
  out << "verdict: " << (pref ? "preferred" : "not preferred") << "\n";
  return out.str();
}

// ---- DOT export ----

// Nodes are the structures taking part in attacks; definite attacks solid,
// possible-but-not-definite dashed.
inline std::string dot_graph(const Program& p, const Analysis& a) {
  std::ostringstream out;
  out << "digraph attacks {\n  node [shape=box];\n";
  std::vector<int> used;
  auto mark = [&](int id) {
    for (int u : used)
      if (u == id) return;
    used.push_back(id);
  };
  for (AttackKey k : a.closure.possible.order) {
    mark(k.first);
    mark(k.second);
  }
  for (int id : used) {
    ArgStructure s = a.universe.items[static_cast<std::size_t>(id)];
    out << "  s" << id << " [label=\"Y: " << render_obj_mask(p, s.y)
        << "\\nX: " << render_obj_mask(p, s.x, true) << "\\nZ: " << render_obj_mask(p, s.z)
        << "\"];\n";
  }
  for (AttackKey k : a.closure.possible.order) {
    bool definite = a.closure.definite.contains(k);
    out << "  s" << k.first << " -> s" << k.second
        << (definite ? " [style=solid];" : " [style=dashed];") << "\n";
  }
  out << "}\n";
  return out.str();
}

// ---- check ----

inline std::string check_text_line(const PrincipleReport& r) {
  std::string line = r.program + " principle " + principle_name(r.principle) + ": " +
                     (r.pass ? "pass" : "FAIL");
  for (const std::string& w : r.witness) line += "\n  " + w;
  return line;
}

inline Json check_json(const std::vector<PrincipleReport>& reports,
                       const std::vector<std::pair<std::string, std::string>>& programs) {
  Json j;
  j["schema"] = 1;
  Json rs = Json::array();
  for (const PrincipleReport& r : reports) {
    Json e;
    e["program"] = r.program;
    e["principle"] = principle_name(r.principle);
    e["verdict"] = r.pass ? "pass" : "fail";
    if (!r.witness.empty()) e["witness"] = r.witness;
    rs.push_back(e);
  }
  j["results"] = rs;
  if (!programs.empty()) {
    Json ps = Json::array();
    for (const auto& [id, text] : programs) {
      Json e;
      e["id"] = id;
      e["text"] = text;
      ps.push_back(e);
    }
    j["programs"] = ps;
  }
  return j;
}

}  // namespace praset

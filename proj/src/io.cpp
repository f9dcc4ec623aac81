#include "qstack/io.hpp"
#include "qstack/field.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace qstack {

std::uint32_t field_prime(const std::string& field) {
  if (field == "Q" || field == "q") return 0;
  std::string f = field;
  if (!f.empty() && (f[0] == 'F' || f[0] == 'f')) f = f.substr(1);
  if (f.size() >= 2 && f.front() == '<' && f.back() == '>') f = f.substr(1, f.size() - 2);
  unsigned long p = 0;
  try {
    size_t used = 0;
    p = std::stoul(f, &used);
    if (used != f.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw std::invalid_argument("unknown field '" + field + "' (use Q, F2 or F<p>)");
  }
  if (p > 2147483647UL || !is_prime(static_cast<std::uint32_t>(p)))
    throw std::invalid_argument("field size " + f + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

std::string normalize_field(const std::string& field) {
  auto p = field_prime(field);
  return p == 0 ? "Q" : "F" + std::to_string(p);
}

namespace {

std::vector<std::string> id_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

AlgSpec parse_alg(const std::string& text) {
  AlgSpec s;
  bool seen_partition = false, seen_layer = false;
  struct Pending {
    std::string text;
    int line, col;
  };
  std::vector<Pending> rels;
  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln) + 1;
    auto toks = tokenize_line(lines[ln]);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto want = [&](size_t n, const char* usage) {
      if (toks.size() != n) throw ParseError(line, toks.size() > n ? toks[n].column : toks.back().column, usage);
    };
    try {
      if (kw == "vertex") {
        want(2, "expected 'vertex <id>'");
        if (s.quiver.find_vertex(toks[1].text)) throw ParseError(line, toks[1].column, "duplicate vertex '" + toks[1].text + "'");
        s.quiver.add_vertex(toks[1].text);
      } else if (kw == "arrow") {
        want(4, "expected 'arrow <id> <source> <target>'");
        if (s.quiver.find_arrow(toks[1].text)) throw ParseError(line, toks[1].column, "duplicate arrow '" + toks[1].text + "'");
        for (int i : {2, 3})
          if (!s.quiver.find_vertex(toks[i].text))
            throw ParseError(line, toks[i].column, "unknown vertex '" + toks[i].text + "'");
        s.quiver.add_arrow(toks[1].text, toks[2].text, toks[3].text);
      } else if (kw == "zero") {
        want(2, "expected 'zero <arrow>*<arrow>...'");
        rels.push_back({toks[1].text, line, toks[1].column});
      } else if (kw == "rel") {
        if (toks.size() != 2 && !(toks.size() == 4 && toks[2].text == "-"))
          throw ParseError(line, toks.size() > 1 ? toks[1].column : toks[0].column, "expected 'rel <path> - <path>'");
        rels.push_back({toks.size() == 2 ? toks[1].text : toks[1].text + " - " + toks[3].text, line, toks[1].column});
      } else if (kw == "field") {
        want(2, "expected 'field Q|F2|F<p>'");
        try {
          s.field = normalize_field(toks[1].text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line, toks[1].column, e.what());
        }
      } else if (kw == "nilp") {
        want(2, "expected 'nilp <N>'");
        try {
          s.nilp = std::stoi(toks[1].text);
        } catch (const std::logic_error&) {
          throw ParseError(line, toks[1].column, "nilpotency bound must be an integer");
        }
        if (s.nilp < 2) throw ParseError(line, toks[1].column, "nilpotency bound must be at least 2");
      } else if (kw == "partition") {
        if (seen_partition || seen_layer) throw ParseError(line, 1, "partition given twice");
        seen_partition = true;
        std::string rest = lines[ln].substr(toks[1 < toks.size() ? 1 : 0].column - 1);
        auto h = rest.find('#');
        if (h != std::string::npos) rest = rest.substr(0, h);
        auto semi = rest.find(';');
        if (semi == std::string::npos) throw ParseError(line, toks[0].column, "expected \"partition E' = ...; E'' = ...\"");
        auto side = [&](std::string part, const char* name) {
          auto eq = part.find('=');
          std::string lhs = eq == std::string::npos ? "" : part.substr(0, eq);
          lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
          if (lhs != name) throw ParseError(line, toks[0].column, std::string("expected ") + name + " = <vertices>");
          auto ids = id_list(part.substr(eq + 1));
          for (auto& v : ids)
            if (!s.quiver.find_vertex(v)) throw ParseError(line, toks[0].column, "unknown vertex '" + v + "' in partition");
          return ids;
        };
        s.layers.push_back(side(rest.substr(0, semi), "E'"));
        s.layers.push_back(side(rest.substr(semi + 1), "E''"));
      } else if (kw == "layer") {
        if (seen_partition) throw ParseError(line, 1, "use either 'partition' or 'layer' lines");
        seen_layer = true;
        std::vector<std::string> ids;
        for (size_t i = 1; i < toks.size(); ++i) {
          for (auto& v : id_list(toks[i].text)) {
            if (!s.quiver.find_vertex(v)) throw ParseError(line, toks[i].column, "unknown vertex '" + v + "'");
            ids.push_back(v);
          }
        }
        if (ids.empty()) throw ParseError(line, 1, "empty layer");
        s.layers.push_back(ids);
      } else {
        throw ParseError(line, toks[0].column, "unknown keyword '" + kw + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, toks[0].column, e.what());
    }
  }
  for (auto& p : rels) {
    Relation r;
    try {
      r = parse_relation(s.quiver, p.text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(p.line, p.col, e.what());
    }
    for (auto& [path, c] : r.terms) {
      if (path.length() < 2) throw ParseError(p.line, p.col, "relations must have length at least 2");
      if (path.length() != r.length()) throw ParseError(p.line, p.col, "relation terms must have equal length");
      if (path.source() != r.terms[0].first.source() || path.target() != r.terms[0].first.target())
        throw ParseError(p.line, p.col, "relation terms must be parallel paths");
    }
    s.relations.push_back(r);
    s.relation_lines.push_back(p.line);
  }
  return s;
}

std::string format_alg(const AlgSpec& s) {
  std::ostringstream os;
  const Quiver& q = s.quiver;
  os << "field " << s.field << "\n";
  os << "nilp " << s.nilp << "\n";
  for (auto& v : q.vertices()) os << "vertex " << v << "\n";
  for (auto& a : q.arrows()) os << "arrow " << a.id << " " << q.vertex(a.source) << " " << q.vertex(a.target) << "\n";
  for (auto& r : s.relations) {
    if (r.is_monomial()) {
      os << "zero " << format_path(q, r.terms[0].first) << "\n";
    } else if (r.terms.size() == 2 && r.terms[0].second == Rational(1) && r.terms[1].second == Rational(-1)) {
      os << "rel " << format_path(q, r.terms[0].first) << " - " << format_path(q, r.terms[1].first) << "\n";
    } else {
      throw std::invalid_argument("relation " + format_relation(q, r) + " has no textual form");
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string o;
    for (size_t i = 0; i < v.size(); ++i) o += (i ? ", " : "") + v[i];
    return o;
  };
  if (s.layers.size() == 2) {
    os << "partition E' = " << join(s.layers[0]) << "; E'' = " << join(s.layers[1]) << "\n";
  } else {
    for (auto& l : s.layers) {
      os << "layer";
      for (auto& v : l) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

namespace {
std::string quote(const std::string& s) {
  std::string o = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o + "\"";
}
}  // namespace

std::string quiver_dot(const Quiver& q, const std::vector<std::vector<std::string>>& layers, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=11];\n";
  if (layers.empty()) {
    for (auto& v : q.vertices()) os << "  " << quote(v) << ";\n";
  } else {
    for (size_t i = 0; i < layers.size(); ++i) {
      os << "  subgraph " << quote("cluster_E" + std::to_string(i)) << " {\n    label=" << quote("E" + std::to_string(i))
         << ";\n";
      for (auto& v : layers[i]) os << "    " << quote(v) << ";\n";
      os << "  }\n";
    }
  }
  for (auto& a : q.arrows())
    os << "  " << quote(q.vertex(a.source)) << " -> " << quote(q.vertex(a.target)) << " [label=" << quote(a.id) << "];\n";
  os << "}\n";
  return os.str();
}

std::string graph_dot(const GraphSpec& g, const std::string& name) {
  // identified nodes are drawn once, under the first name
  std::map<std::string, std::string> rep;
  auto find = [&](std::string x) {
    while (rep.count(x) && rep[x] != x) x = rep[x];
    return x;
  };
  for (auto& i : g.identify) {
    auto a = find(i.a), b = find(i.b);
    if (a != b) rep[b] = a;
  }
  std::map<std::string, std::string> label;
  for (auto& t : g.tops) label[t.name] = t.vertex;
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  node [shape=plaintext, fontsize=11];\n";
  for (auto& t : g.tops) os << "  " << quote(t.name) << " [label=" << quote(t.vertex) << "];\n";
  for (auto& e : g.edges) {
    std::string to = find(e.to);
    if (to == e.to) os << "  " << quote(to) << " [label=" << quote(e.vertex.empty() ? e.to : e.vertex) << "];\n";
    os << "  " << quote(find(e.from)) << " -> " << quote(to) << " [arrowhead=none, label=" << quote(e.arrow) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace qstack

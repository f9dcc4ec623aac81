#include "qstack/graph_module.hpp"

#include <sstream>

namespace qstack {

namespace {

// "--alpha-->" -> "alpha"
bool arrow_label(const std::string& tok, std::string* id) {
  if (tok.size() < 6 || tok.compare(0, 2, "--") != 0 || tok.compare(tok.size() - 3, 3, "-->") != 0) return false;
  *id = tok.substr(2, tok.size() - 5);
  return !id->empty();
}

// Rejoin tokens around ':' so "x0:", "x0 :", "x0 : a" and "x0: a" all parse.
std::vector<Token> split_colons(const std::vector<Token>& toks) {
  std::vector<Token> out;
  for (auto& t : toks) {
    size_t start = 0;
    for (size_t i = 0; i <= t.text.size(); ++i) {
      if (i == t.text.size() || t.text[i] == ':') {
        if (i > start) out.push_back({t.text.substr(start, i - start), t.column + static_cast<int>(start)});
        if (i < t.text.size()) out.push_back({":", t.column + static_cast<int>(i)});
        start = i + 1;
      }
    }
  }
  return out;
}

}  // namespace

GraphSpec parse_graph(const std::string& text) {
  GraphSpec g;
  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln) + 1;
    auto toks = split_colons(tokenize_line(lines[ln]));
    if (toks.empty()) {
      auto h = lines[ln].find('#');
      if (h != std::string::npos) g.comments.push_back(lines[ln].substr(h + 1));
      continue;
    }
    const std::string& kw = toks[0].text;
    auto err = [&](size_t i, const std::string& msg) {
      int col = i < toks.size() ? toks[i].column : static_cast<int>(lines[ln].size()) + 1;
      return ParseError(line, col, msg);
    };
    if (kw == "top") {
      if (toks.size() != 4 || toks[2].text != ":") throw err(1, "expected 'top <name>: <vertex>'");
      g.tops.push_back({toks[1].text, toks[3].text, line});
    } else if (kw == "edge") {
      std::string id;
      if (toks.size() < 4 || !arrow_label(toks[2].text, &id)) throw err(2, "expected 'edge <node> --<arrow>--> <node>'");
      GraphSpec::Edge e{toks[1].text, id, toks[3].text, "", line};
      if (toks.size() == 6 && toks[4].text == ":")
        e.vertex = toks[5].text;
      else if (toks.size() != 4)
        throw err(4, "unexpected text after edge");
      g.edges.push_back(e);
    } else if (kw == "identify") {
      if (toks.size() != 3) throw err(1, "expected 'identify <node> <node>'");
      g.identify.push_back({toks[1].text, toks[2].text, line});
    } else {
      throw err(0, "unknown keyword '" + kw + "'");
    }
  }
  return g;
}

std::string format_graph(const GraphSpec& g) {
  std::ostringstream os;
  for (auto& c : g.comments) os << "#" << c << "\n";
  for (auto& t : g.tops) os << "top " << t.name << ": " << t.vertex << "\n";
  for (auto& e : g.edges) {
    os << "edge " << e.from << " --" << e.arrow << "--> " << e.to;
    if (!e.vertex.empty()) os << " : " << e.vertex;
    os << "\n";
  }
  for (auto& i : g.identify) os << "identify " << i.a << " " << i.b << "\n";
  return os.str();
}

}  // namespace qstack

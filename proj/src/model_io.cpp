#include "tms/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace tms {

namespace {

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits a line into words, braces and commas becoming separators/tokens.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<std::string> tokens, int line, const std::map<std::string, int>* names)
      : tokens_(std::move(tokens)), line_(line), names_(names) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const { return tokens_[pos_]; }
  std::string next() {
    if (done()) fail("unexpected end of line");
    return tokens_[pos_++];
  }

  Subset set() {
    if (next() != "{") fail("expected '{'");
    Subset s;
    while (true) {
      const std::string tok = next();
      if (tok == "}") return s;
      const auto it = names_->find(tok);
      if (it == names_->end()) fail("unknown point '" + tok + "'");
      s = s.with(it->second);
    }
  }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::kGrammar) const {
    throw ParseError(code, line_, msg);
  }

  int line() const { return line_; }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  int line_;
  const std::map<std::string, int>* names_;
};

}  // namespace

Space parse_model(std::string_view text) {
  std::vector<std::string> points;
  std::map<std::string, int> index;
  std::vector<Subset> opens;
  std::optional<Partition> atoms;
  int sigma_line = 0;
  struct MassEntry {
    Subset key;
    ExtValue value;
    int line;
  };
  std::vector<MassEntry> masses;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    LineParser lp(std::move(tokens), line_no, &index);
    const std::string keyword = lp.next();
    if (keyword == "points") {
      if (!points.empty()) lp.fail("duplicate 'points' line");
      while (!lp.done()) {
        std::string name = lp.next();
        if (!is_ident(name)) lp.fail("bad point name '" + name + "'");
        if (index.count(name) != 0) lp.fail("duplicate point '" + name + "'");
        index.emplace(name, static_cast<int>(points.size()));
        points.push_back(std::move(name));
      }
      if (points.empty()) lp.fail("'points' needs at least one name");
      if (static_cast<int>(points.size()) > kMaxPoints)
        lp.fail("at most " + std::to_string(kMaxPoints) + " points supported");
    } else if (points.empty()) {
      lp.fail("the first line must be 'points'");
    } else if (keyword == "open") {
      opens.push_back(lp.set());
    } else if (keyword == "sigma") {
      if (atoms) lp.fail("duplicate 'sigma' line");
      sigma_line = line_no;
      const std::string mode = lp.next();
      if (mode == "powerset") {
        atoms = Partition::singletons(Subset::full(static_cast<int>(points.size())));
      } else if (mode == "atoms") {
        std::vector<Subset> blocks;
        while (!lp.done()) blocks.push_back(lp.set());
        if (blocks.empty()) lp.fail("'sigma atoms' needs at least one atom");
        Partition p(blocks);
        if (!p.is_valid() || p.carrier() != Subset::full(static_cast<int>(points.size())))
          lp.fail("sigma atoms must be nonempty, disjoint and cover the points", ErrorCode::kSigma);
        atoms = std::move(p);
      } else {
        lp.fail("expected 'powerset' or 'atoms'");
      }
    } else if (keyword == "mass") {
      const Subset key = lp.set();
      const std::string value = lp.next();
      const auto v = ExtValue::parse(value);
      if (!v) lp.fail("malformed mass value '" + value + "'", ErrorCode::kMass);
      masses.push_back({key, *v, line_no});
    } else {
      lp.fail("unknown keyword '" + keyword + "'");
    }
    if (!lp.done()) lp.fail("trailing tokens");
    if (end == text.size()) break;
  }

  if (points.empty()) throw ParseError(ErrorCode::kGrammar, 0, "missing 'points' line");
  if (!atoms) throw ParseError(ErrorCode::kGrammar, 0, "missing 'sigma' line");
  const int n = static_cast<int>(points.size());

  Topology topology;
  try {
    topology = Topology::make(Subset::full(n), opens);
  } catch (const ModelError& e) {
    throw ParseError(ErrorCode::kTopology, 0, e.detail());
  }

  std::vector<std::optional<ExtValue>> by_atom(static_cast<std::size_t>(atoms->size()));
  for (const MassEntry& m : masses) {
    const int id = m.key.empty() ? -1 : atoms->block_of(m.key.lowest());
    if (id < 0 || atoms->block(id) != m.key)
      throw ParseError(ErrorCode::kMass, m.line, "mass key " + format_set(m.key, points) + " is not a sigma-atom");
    if (by_atom[static_cast<std::size_t>(id)])
      throw ParseError(ErrorCode::kMass, m.line, "duplicate mass for " + format_set(m.key, points));
    by_atom[static_cast<std::size_t>(id)] = m.value;
  }
  std::vector<ExtValue> mass;
  for (int i = 0; i < atoms->size(); ++i) {
    if (!by_atom[static_cast<std::size_t>(i)])
      throw ParseError(ErrorCode::kMass, 0, "missing mass for atom " + format_set(atoms->block(i), points));
    mass.push_back(*by_atom[static_cast<std::size_t>(i)]);
  }

  try {
    return Space::make(std::move(points), std::move(topology), SigmaAlgebra(std::move(*atoms)), Measure(std::move(mass)));
  } catch (const ModelError& e) {
    throw ParseError(e.code(), e.code() == ErrorCode::kSigma ? sigma_line : 0, e.detail());
  }
}

namespace {

std::vector<std::string> model_lines(const Space& space) {
  std::vector<std::string> lines;
  std::string pts = "points";
  for (const auto& p : space.points()) pts += " " + p;
  lines.push_back(std::move(pts));
  for (Subset o : space.open_sets())
    if (!o.empty() && o != space.ground()) lines.push_back("open " + format_set(o, space.points()));
  const Partition& atoms = space.sigma().atoms();
  const bool powerset = std::all_of(atoms.blocks().begin(), atoms.blocks().end(), [](Subset a) { return a.size() == 1; });
  if (powerset) {
    lines.emplace_back("sigma powerset");
  } else {
    std::string s = "sigma atoms";
    for (Subset a : atoms.blocks()) s += " " + format_set(a, space.points());
    lines.push_back(std::move(s));
  }
  for (int i = 0; i < atoms.size(); ++i)
    lines.push_back("mass " + format_set(atoms.block(i), space.points()) + " " + space.measure().atom_mass(i).to_string());
  return lines;
}

}  // namespace

std::string serialize_model(const Space& space) {
  std::string out;
  for (const auto& l : model_lines(space)) out += l + "\n";
  return out;
}

std::string serialize_model_inline(const Space& space) {
  std::string out;
  for (const auto& l : model_lines(space)) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

std::string format_set(Subset s, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ' ';
    first = false;
    out += p < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(p)] : default_point_name(p);
  });
  return out + "}";
}

std::string format_bits(Subset s) { return format_set(s, {}); }

}  // namespace tms

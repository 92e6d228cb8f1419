#include "proxideal/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "proxideal/harness.hpp"

namespace proxideal {

Subset const& InstanceDocument::ideal(std::string_view name) const {
  for (auto const& [n, s] : ideals)
    if (n == name) return s;
  std::string known;
  for (auto const& entry : ideals) known += (known.empty() ? "" : ", ") + entry.first;
  throw Error(ErrorKind::InvalidArgument, "no ideal named '" + std::string(name) + "' (known: " +
                                              (known.empty() ? "none" : known) + ")");
}

Point InstanceDocument::point(std::string_view name) const {
  auto const& names = instance.names();
  for (Point p = 0; p < names.size(); ++p)
    if (names[p] == name) return p;
  throw Error(ErrorKind::InvalidArgument, "no point named '" + std::string(name) + "'");
}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t const end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, std::string const& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void invalid(std::size_t line, std::string const& what) {
  throw Error(ErrorKind::ValidationError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(Line const& line, std::string const& tok) {
  std::int64_t v = 0;
  auto const [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    parse_error(line.number, "expected an integer, got '" + tok + "'");
  }
  return v;
}

bool is_keyword(std::string const& tok) {
  static char const* const words[] = {"instance", "points", "feature", "add", "mul",
                                      "carrier",  "ideal",  "end"};
  for (char const* w : words)
    if (tok == w) return true;
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t max_points) : lines_(tokenize(text)), max_points_(max_points) {}

  InstanceDocument run() {
    if (lines_.empty()) parse_error(1, "empty document, expected 'instance'");
    header();
    points();
    std::vector<char> seen_feature(names_.size(), 0);
    std::size_t seen_count = 0;
    std::optional<std::size_t> arity;
    std::optional<OpTable> add, mul;
    std::optional<Subset> carrier;
    std::vector<std::pair<std::string, Subset>> ideals;
    std::vector<FeatureVector> feats(names_.size());
    bool ended = false;

    while (pos_ < lines_.size()) {
      Line const& line = lines_[pos_++];
      std::string const& kw = line.tokens[0];
      if (kw == "feature") {
        if (line.tokens.size() < 4 || line.tokens[2] != "=") {
          parse_error(line.number, "expected 'feature NAME = INT...'");
        }
        Point const p = resolve(line, line.tokens[1]);
        if (seen_feature[p]) invalid(line.number, "second feature line for '" + line.tokens[1] + "'");
        seen_feature[p] = 1;
        ++seen_count;
        for (std::size_t i = 3; i < line.tokens.size(); ++i) feats[p].push_back(parse_int(line, line.tokens[i]));
        if (arity && *arity != feats[p].size()) {
          invalid(line.number, "feature arity " + std::to_string(feats[p].size()) + " for '" +
                                   line.tokens[1] + "', earlier points have " + std::to_string(*arity));
        }
        arity = feats[p].size();
      } else if (kw == "add" || kw == "mul") {
        auto& slot = kw == "add" ? add : mul;
        if (slot) invalid(line.number, "second '" + kw + "' table");
        if (line.tokens.size() != 1) parse_error(line.number, "unexpected token '" + line.tokens[1] + "'");
        slot = table(line, kw);
      } else if (kw == "carrier") {
        if (carrier) invalid(line.number, "second 'carrier' line");
        carrier = subset(line, 1);
      } else if (kw == "ideal") {
        if (line.tokens.size() < 3 || line.tokens[2] != "=") {
          parse_error(line.number, "expected 'ideal NAME = POINT...'");
        }
        check_name(line, line.tokens[1]);
        for (auto const& entry : ideals)
          if (entry.first == line.tokens[1]) invalid(line.number, "ideal '" + line.tokens[1] + "' declared twice");
        ideals.emplace_back(line.tokens[1], subset(line, 3));
      } else if (kw == "end") {
        if (line.tokens.size() != 1) parse_error(line.number, "unexpected token '" + line.tokens[1] + "'");
        ended = true;
        break;
      } else {
        parse_error(line.number, "unexpected token '" + kw + "'");
      }
    }
    std::size_t const last = lines_.back().number;
    if (!ended) parse_error(last, "missing 'end'");
    if (pos_ < lines_.size()) parse_error(lines_[pos_].number, "unexpected token '" + lines_[pos_].tokens[0] + "' after 'end'");
    if (seen_count != names_.size()) {
      for (Point p = 0; p < names_.size(); ++p)
        if (!seen_feature[p]) invalid(last, "no feature line for point '" + names_[p] + "'");
    }
    if (!add) invalid(last, "missing 'add' table");
    if (!mul) invalid(last, "missing 'mul' table");
    if (!carrier) invalid(last, "missing 'carrier' line");

    std::size_t const n = names_.size();
    AlgebraInstance inst(DescriptiveSpace(std::move(feats)), std::move(*add), std::move(*mul),
                         std::move(*carrier), default_names(n) ? std::vector<std::string>{} : names_);
    return InstanceDocument{label_, std::move(inst), std::move(ideals)};
  }

 private:
  bool default_names(std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i)
      if (names_[i] != std::to_string(i)) return false;
    return true;
  }

  void header() {
    Line const& line = lines_[pos_++];
    if (line.tokens[0] != "instance") parse_error(line.number, "expected 'instance', got '" + line.tokens[0] + "'");
    if (line.tokens.size() != 2) {
      parse_error(line.number, line.tokens.size() < 2 ? "missing instance label"
                                                      : "unexpected token '" + line.tokens[2] + "'");
    }
    label_ = line.tokens[1];
  }

  void points() {
    if (pos_ >= lines_.size()) parse_error(lines_.back().number, "expected 'points'");
    Line const& line = lines_[pos_++];
    if (line.tokens[0] != "points") parse_error(line.number, "expected 'points', got '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2) invalid(line.number, "an instance needs at least one point");
    std::size_t const n = line.tokens.size() - 1;
    if (n > std::min(max_points_, kMaxPoints)) {
      throw Error(ErrorKind::TooLarge, "line " + std::to_string(line.number) + ": " + std::to_string(n) +
                                           " points exceed the limit of " +
                                           std::to_string(std::min(max_points_, kMaxPoints)));
    }
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      std::string const& name = line.tokens[i];
      check_name(line, name);
      if (index_.count(name) != 0) invalid(line.number, "point '" + name + "' declared twice");
      index_[name] = static_cast<Point>(names_.size());
      names_.push_back(name);
    }
  }

  void check_name(Line const& line, std::string const& name) const {
    if (is_keyword(name) || name.find('=') != std::string::npos) {
      parse_error(line.number, "'" + name + "' cannot be used as a name");
    }
  }

  Point resolve(Line const& line, std::string const& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) invalid(line.number, "undeclared point '" + name + "'");
    return it->second;
  }

  Subset subset(Line const& line, std::size_t from) const {
    Subset s(names_.size());
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
      Point const p = resolve(line, line.tokens[i]);
      if (s.contains(p)) invalid(line.number, "point '" + line.tokens[i] + "' listed twice");
      s.insert(p);
    }
    return s;
  }

  OpTable table(Line const& head, std::string const& kw) {
    std::size_t const n = names_.size();
    std::vector<Point> cells;
    for (std::size_t row = 0; row < n; ++row) {
      if (pos_ >= lines_.size() || is_keyword(lines_[pos_].tokens[0])) {
        std::size_t const at = pos_ < lines_.size() ? lines_[pos_].number : head.number;
        invalid(at, "table '" + kw + "' has " + std::to_string(row) + " rows, expected " + std::to_string(n));
      }
      Line const& line = lines_[pos_++];
      if (line.tokens.size() != n) {
        invalid(line.number, "table '" + kw + "' row " + std::to_string(row) + " has " +
                                 std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(n));
      }
      for (auto const& tok : line.tokens) {
        std::int64_t const v = parse_int(line, tok);
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          invalid(line.number, "table entry '" + tok + "' is not a point index below " + std::to_string(n));
        }
        cells.push_back(static_cast<Point>(v));
      }
    }
    return OpTable(n, std::move(cells));
  }

  std::vector<Line> lines_;
  std::size_t max_points_;
  std::size_t pos_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::map<std::string, Point> index_;
};

}  // namespace

InstanceDocument parse_instance(std::string_view text, std::size_t max_points) {
  return Parser(text, max_points).run();
}

InstanceDocument load_instance(std::string const& path, std::size_t max_points) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), max_points);
}

std::string serialize_instance(InstanceDocument const& doc) {
  AlgebraInstance const& inst = doc.instance;
  std::size_t const n = inst.size();
  std::ostringstream out;
  out << "instance " << doc.label << "\n";
  out << "points";
  for (auto const& name : inst.names()) out << ' ' << name;
  out << "\n";
  for (Point p = 0; p < n; ++p) {
    out << "feature " << inst.name(p) << " =";
    for (auto v : inst.space().feature(p)) out << ' ' << v;
    out << "\n";
  }
  auto table = [&](char const* kw, OpTable const& t) {
    out << kw << "\n";
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) out << (b == 0 ? "" : " ") << t(a, b);
      out << "\n";
    }
  };
  table("add", inst.add_table());
  table("mul", inst.mul_table());
  out << "carrier";
  for (Point p : inst.carrier()) out << ' ' << inst.name(p);
  out << "\n";
  for (auto const& [name, s] : doc.ideals) {
    out << "ideal " << name << " =";
    for (Point p : s) out << ' ' << inst.name(p);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

InstanceDocument document_with_ideals(std::string label, AlgebraInstance const& inst) {
  bool short_names = true;
  for (auto const& name : inst.names()) short_names = short_names && name.size() == 1;
  std::vector<std::pair<std::string, Subset>> ideals;
  for (Subset const& w : enumerate_ideals(inst)) {
    std::string name = "W";
    bool first = true;
    for (Point p : w) {
      if (!short_names && !first) name += '_';
      name += inst.name(p);
      first = false;
    }
    ideals.emplace_back(std::move(name), w);
  }
  return InstanceDocument{std::move(label), inst, std::move(ideals)};
}

}  // namespace proxideal

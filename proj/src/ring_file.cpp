#include "fsig/ring_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"

namespace fsig {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // of the first value character
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    if (lead) *lead = s.size();
    return {};
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& what, const Entry& at, std::size_t offset = 0) {
  throw ParseError("line " + std::to_string(at.line) + ", column " +
                       std::to_string(at.column + offset) + ": " + what,
                   offset, at.line, at.column + offset);
}

std::uint64_t parse_unsigned(const Entry& e) {
  std::uint64_t v = 0;
  const char* end = e.value.data() + e.value.size();
  auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc() || ptr != end) fail("expected a non-negative integer", e);
  return v;
}

std::vector<std::string> split_list(const Entry& e) {
  std::vector<std::string> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string_view t = trim(item);
    if (t.empty()) fail("empty list item", e);
    out.emplace_back(t);
  }
  return out;
}

// Re-raises a polynomial parse error at its file position.
template <typename F>
auto at_entry(const Entry& e, F&& f) {
  try {
    return f(e.value);
  } catch (const ParseError& err) {
    fail(err.what(), e, err.position());
  }
}

}  // namespace

RingDefinition parse_ring_definition(std::string_view text,
                                     std::optional<std::uint64_t> p_override,
                                     ResourceLimits limits) {
  static const std::map<std::string, bool, std::less<>> known = {
      {"p", false},           {"vars", false},         {"relation", true},
      {"label", false},       {"dimension", false},    {"weights", false},
      {"params", false},      {"socle", false},        {"qgor.canonical", false},
      {"qgor.h", false},      {"qgor.a", false},       {"qgor.params", false},
      {"qgor.a_rest", false}, {"qgor.saturator", false}};
  std::multimap<std::string, Entry, std::less<>> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    std::size_t eq = line.find('=');
    Entry where{"", line_no, 1};
    if (eq == std::string_view::npos) fail("expected 'key = value'", where);
    std::string key(trim(line.substr(0, eq)));
    auto k = known.find(key);
    if (k == known.end()) fail("unknown key '" + key + "'", where);
    if (!k->second && entries.count(key)) fail("duplicate key '" + key + "'", where);
    std::size_t lead = 0;
    std::string_view value = trim(line.substr(eq + 1), &lead);
    entries.emplace(key, Entry{std::string(value), line_no, eq + 2 + lead});
  }

  auto get = [&](std::string_view key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  const Entry* p_entry = get("p");
  const Entry* vars_entry = get("vars");
  if (!p_entry && !p_override) throw ParseError("missing key 'p'", 0, line_no, 1);
  if (!vars_entry) throw ParseError("missing key 'vars'", 0, line_no, 1);

  std::uint64_t p = p_override ? *p_override : parse_unsigned(*p_entry);
  std::vector<std::string> names = split_list(*vars_entry);
  std::vector<Exponent> weights;
  if (const Entry* w = get("weights")) {
    for (const std::string& s : split_list(*w)) {
      Entry item{s, w->line, w->column};
      weights.push_back(parse_unsigned(item));
    }
  }
  std::vector<Polynomial> relations;
  RingPtr names_only =
      std::make_shared<const Ring>(PrimeField(p), names, std::vector<Polynomial>{}, weights, limits);
  auto [lo, hi] = entries.equal_range("relation");
  for (auto it = lo; it != hi; ++it) {
    relations.push_back(at_entry(it->second, [&](const std::string& v) {
      return names_only->parse(v);
    }));
  }

  RingDefinition def;
  def.ring = std::make_shared<const Ring>(PrimeField(p), names, std::move(relations),
                                          std::move(weights), limits);
  const Ring& ring = *def.ring;
  auto poly = [&](const Entry& e) { return at_entry(e, [&](const std::string& v) { return ring.parse(v); }); };
  auto list = [&](const Entry& e) {
    return at_entry(e, [&](const std::string& v) { return ring.parse_list(v); });
  };

  def.label = get("label") ? get("label")->value : "ring";
  if (const Entry* d = get("dimension")) def.dimension = static_cast<int>(parse_unsigned(*d));
  if (const Entry* e = get("params")) def.parameters = list(*e);
  if (const Entry* e = get("socle")) def.socle = poly(*e);

  if (const Entry* canon = get("qgor.canonical")) {
    QGorensteinData q{def.ring, list(*canon), 1, ring.zero(), {}, {}, ring.zero()};
    if (const Entry* e = get("qgor.h")) q.h = static_cast<unsigned>(parse_unsigned(*e));
    if (const Entry* e = get("qgor.a")) q.a = poly(*e);
    if (const Entry* e = get("qgor.params")) q.parameters = list(*e);
    if (const Entry* e = get("qgor.a_rest")) q.a_rest = list(*e);
    if (const Entry* e = get("qgor.saturator")) q.saturator = poly(*e);
    def.qgorenstein = std::move(q);
  }

  if (def.dimension) {
    int actual = ring_dimension(def.ring);
    if (actual != *def.dimension) {
      throw ValidationError("declared dimension " + std::to_string(*def.dimension) +
                            " but the ring has dimension " + std::to_string(actual));
    }
  }
  return def;
}

RingDefinition load_ring_definition(const std::string& path,
                                    std::optional<std::uint64_t> p_override,
                                    ResourceLimits limits) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open ring file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  RingDefinition def = parse_ring_definition(buf.str(), p_override, limits);
  if (def.label == "ring") def.label = std::filesystem::path(path).stem().string();
  return def;
}

}  // namespace fsig

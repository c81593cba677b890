#include "bnpoly/ground_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace bnpoly {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Subset> subsets_of(Subset s) {
  // Enumerate submasks in ascending order.
  std::vector<Subset> out;
  std::uint32_t sub = 0;
  const std::uint32_t m = s.mask();
  while (true) {
    out.emplace_back(sub);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2 || labels_.size() > static_cast<std::size_t>(kMaxNodes)) {
    throw std::invalid_argument("ground set must have between 2 and 16 nodes");
  }
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("ground set labels must be distinct");
  }
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty node label");
    if (l.size() != 1) single_char_ = false;
    if (l.find_first_of(",|\" ") != std::string::npos) {
      throw std::invalid_argument("node label contains a reserved character: " + l);
    }
  }
}

GroundSet GroundSet::letters(int n) {
  if (n < 2 || n > kMaxNodes) throw std::invalid_argument("ground set must have between 2 and 16 nodes");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::string GroundSet::format(Subset s) const {
  std::string out;
  for (int node : s.elements()) {
    if (!single_char_ && !out.empty()) out += ',';
    out += label(node);
  }
  return out;
}

Subset GroundSet::parse_subset(std::string_view text) const {
  Subset s;
  auto add = [&](std::string_view token) {
    auto idx = index_of(token);
    if (!idx) throw std::invalid_argument("unknown node label '" + std::string(token) + "'");
    if (s.contains(*idx)) throw std::invalid_argument("repeated node label '" + std::string(token) + "'");
    s = s.with(*idx);
  };
  if (single_char_ && text.find(',') == std::string_view::npos) {
    for (char c : text) add(std::string_view(&c, 1));
    return s;
  }
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!token.empty()) add(token);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

const char* to_string(IndexFamily family) {
  switch (family) {
    case IndexFamily::fam: return "fam";
    case IndexFamily::cai: return "char";
    case IndexFamily::power_set: return "power";
  }
  return "?";
}

std::vector<FamilyIndex> enumerate_family_indices(int n) {
  std::vector<FamilyIndex> out;
  const std::uint32_t full = Subset::full(n).mask();
  for (int a = 0; a < n; ++a) {
    const std::uint32_t others = full & ~(std::uint32_t{1} << a);
    for (std::uint32_t m = 1; m <= full; ++m) {
      if ((m & ~others) == 0) out.push_back({a, Subset(m)});
    }
  }
  return out;
}

std::vector<Subset> enumerate_cai(int n) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m <= Subset::full(n).mask(); ++m) {
    if (std::popcount(m) >= 2) out.emplace_back(m);
  }
  std::stable_sort(out.begin(), out.end(), BySizeThenMask{});
  return out;
}

std::vector<Subset> enumerate_power_set(int n) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m <= Subset::full(n).mask(); ++m) out.emplace_back(m);
  return out;
}

std::string format_family_index(const GroundSet& gs, const FamilyIndex& index) {
  return gs.label(index.node) + "|" + gs.format(index.parents);
}

FamilyIndex parse_family_index(const GroundSet& gs, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("family index needs a '|': " + std::string(text));
  auto node = gs.index_of(text.substr(0, bar));
  if (!node) throw std::invalid_argument("unknown node in family index: " + std::string(text));
  FamilyIndex idx{*node, gs.parse_subset(text.substr(bar + 1))};
  if (idx.parents.contains(idx.node)) throw std::invalid_argument("node among its own parents: " + std::string(text));
  return idx;
}

Rational scalar_product(const TaggedVector& x, const TaggedVector& y) {
  if (x.family != y.family) throw std::invalid_argument("scalar product across index families");
  if (x.n != y.n || x.values.size() != y.values.size()) {
    throw std::invalid_argument("scalar product across ground sets");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < x.values.size(); ++i) sum += x.values[i] * y.values[i];
  return sum;
}

CharVector to_char_vector(const SetFunction& m) {
  CharVector out(m.ground_size());
  for (const auto& [s, v] : m.nonzeros()) {
    if (s.size() >= 2) out.set(s, v);
  }
  return out;
}

SetFunction to_set_function(const CharVector& m) {
  SetFunction out(m.ground_size());
  for (const auto& [s, v] : m.nonzeros()) out.set(s, v);
  return out;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid_int(std::string_view(s).substr(0, slash)) ||
      (slash != std::string::npos && !valid_int(std::string_view(s).substr(slash + 1)))) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

SetFunction delta(int n, Subset a) {
  SetFunction out(n);
  out.set(a, 1);
  return out;
}

}  // namespace bnpoly

#include "segcalc/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "segcalc/errors.hpp"
#include "segcalc/keyvalue.hpp"

namespace segcalc {

FormalSegment::FormalSegment(Int start_, Int len_) : start(start_), len(len_) {
  if (len < 1) throw DomainError("segment length must be >= 1, got " + std::to_string(len));
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (Int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

std::vector<Int> Partition::partial_sums(std::size_t length) const {
  std::vector<Int> out(std::max(length, parts_.size()));
  Int acc = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < parts_.size()) acc += parts_[i];
    out[i] = acc;
  }
  return out;
}

Multisegment::Multisegment(std::vector<FormalSegment> segments) : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(), [](const FormalSegment& x, const FormalSegment& y) {
    if (x.len != y.len) return x.len > y.len;
    return x.start < y.start;
  });
}

Multisegment Multisegment::from_partition(const Partition& p) {
  std::vector<FormalSegment> segs;
  for (Int n : p.parts()) segs.emplace_back(0, n);
  return Multisegment(std::move(segs));
}

Int Multisegment::length() const noexcept {
  Int total = 0;
  for (const auto& s : segments_) total += s.len;
  return total;
}

Partition Multisegment::shape() const {
  std::vector<Int> lens;
  for (const auto& s : segments_) lens.push_back(s.len);
  return Partition(std::move(lens));
}

Multisegment Multisegment::operator+(const Multisegment& other) const {
  std::vector<FormalSegment> all = segments_;
  all.insert(all.end(), other.segments_.begin(), other.segments_.end());
  return Multisegment(std::move(all));
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) {
    throw DomainError("dominance_leq: lengths differ (" + std::to_string(mu.weight()) + " vs " +
                      std::to_string(nu.weight()) + ")");
  }
  const std::size_t r = std::min(mu.size(), nu.size());
  Int sm = 0;
  Int sn = 0;
  for (std::size_t k = 0; k < r; ++k) {
    sm += mu.parts()[k];
    sn += nu.parts()[k];
    if (sm > sn) return false;
  }
  return true;
}

bool dominance_leq(const Multisegment& mu, const Multisegment& nu) {
  return dominance_leq(mu.shape(), nu.shape());
}

Partition conjugate(const Partition& p) {
  std::vector<Int> out;
  if (p.empty()) return Partition{};
  const Int rows = p.parts().front();
  for (Int col = 1; col <= rows; ++col) {
    Int count = 0;
    for (Int part : p.parts()) {
      if (part >= col) ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

namespace {

void partitions_rec(Int remaining, Int max_part, std::vector<Int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (Int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

void compositions_rec(Int remaining, Int slots, Composition& current, std::vector<Composition>& out) {
  if (slots == 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (Int first = remaining; first >= 0; --first) {
    current.push_back(first);
    compositions_rec(remaining - first, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(Int n) {
  if (n < 0) throw DomainError("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<Int> current;
  partitions_rec(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(Int n, Int parts) {
  if (n < 0) throw DomainError("compositions_of: n must be >= 0");
  if (parts < 1) throw DomainError("compositions_of: parts must be >= 1");
  std::vector<Composition> out;
  Composition current;
  compositions_rec(n, parts, current, out);
  return out;
}

void sort_by_dominance(std::vector<Partition>& ps) {
  std::size_t width = 0;
  for (const auto& p : ps) width = std::max(width, p.size());
  std::stable_sort(ps.begin(), ps.end(), [width](const Partition& x, const Partition& y) {
    auto sx = x.partial_sums(width);
    auto sy = y.partial_sums(width);
    if (sx != sy) return sx < sy;
    return x.parts() < y.parts();
  });
}

std::vector<std::pair<Partition, Partition>> dominance_hasse(Int n) {
  auto ps = partitions_of(n);
  sort_by_dominance(ps);
  std::vector<std::pair<Partition, Partition>> edges;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j || !dominance_leq(ps[i], ps[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < ps.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (dominance_leq(ps[i], ps[k]) && dominance_leq(ps[k], ps[j])) covered = false;
      }
      if (covered) edges.emplace_back(ps[i], ps[j]);
    }
  }
  return edges;
}

std::string format(const FormalSegment& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.len) + "]";
}

std::string format(const Multisegment& m) {
  if (m.segments().empty()) return "0";
  std::string out;
  for (const auto& s : m.segments()) {
    if (!out.empty()) out += "+";
    out += format(s);
  }
  return out;
}

std::string format_composition(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string format(const Partition& p) { return format_composition(p.parts()); }

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<Int> parse_int_list(std::string_view body) {
  std::vector<Int> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    out.push_back(parse_int(body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Multisegment parse_multisegment(std::string_view text) {
  const std::string s = strip(text);
  if (s == "0") return Multisegment{};
  std::vector<FormalSegment> segs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '[') throw ParseError("expected '[' in multisegment '" + s + "'");
    auto close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated segment in '" + s + "'");
    auto values = parse_int_list(std::string_view(s).substr(pos + 1, close - pos - 1));
    if (values.size() != 2) throw ParseError("segment needs two integers in '" + s + "'");
    segs.emplace_back(values[0], values[1]);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw ParseError("expected '+' between segments in '" + s + "'");
      ++pos;
      if (pos == s.size()) throw ParseError("trailing '+' in '" + s + "'");
    }
  }
  if (segs.empty()) throw ParseError("empty multisegment text");
  return Multisegment(std::move(segs));
}

Partition parse_partition(std::string_view text) {
  const std::string s = strip(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("partition must be written (n1,n2,...): '" + s + "'");
  }
  auto parts = parse_int_list(std::string_view(s).substr(1, s.size() - 2));
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw ParseError("partition parts must be weakly decreasing: '" + s + "'");
  }
  return Partition(std::move(parts));
}

}  // namespace segcalc

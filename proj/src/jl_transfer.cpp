#include "segcalc/jl_transfer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "segcalc/errors.hpp"
#include "segcalc/parallel.hpp"

namespace segcalc {

int zelevinski_sign(Int r) {
  if (r < 1) throw DomainError("zelevinski_sign: r must be >= 1");
  return r % 2 == 1 ? 1 : -1;
}

namespace {

// Admissible w for (c, ell) are 1 and p * ell^j with p | ell - 1 and
// j < v(c); this lists them without scanning up to c(ell - 1).
std::vector<Int> admissible_ws(Int c, Int ell) {
  std::vector<Int> out{1};
  const int v = valuation(c, ell);
  for (Int p = 1; p < ell; ++p) {
    if ((ell - 1) % p != 0) continue;
    Int w = p;
    for (int j = 0; j < v; ++j) {
      if (is_admissible_triple(w, c, ell) && w > 1) out.push_back(w);
      if (__builtin_mul_overflow(w, ell, &w)) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Int> partner_candidates(Int w, Int c, Int ell) {
  if (!is_admissible_triple(w, c, ell)) {
    throw DomainError("(w=" + std::to_string(w) + ", c=" + std::to_string(c) + ", ell=" + std::to_string(ell) +
                      ") is not admissible");
  }
  const Int t = t_of(w, c, ell);
  std::vector<Int> out;
  for (Int wp : admissible_ws(c, ell)) {
    if (wp >= w && t_of(wp, c, ell) >= t) out.push_back(wp);
  }
  return out;
}

Int infer_partner_w(Int w, Int c, Int ell) {
  for (Int wp : partner_candidates(w, c, ell)) {
    if (wp != w) {
      throw CounterexampleError("w'=" + std::to_string(wp) + " survives for (w=" + std::to_string(w) +
                                ", c=" + std::to_string(c) + ", ell=" + std::to_string(ell) + ")");
    }
  }
  return w;
}

nlohmann::json PartnerSweepLine::to_json() const {
  nlohmann::json j{{"check", "lemma57"}, {"ell", ell}, {"c", c}, {"tested", tested},
                   {"counterexamples", counterexamples}, {"pass", counterexamples == 0}};
  if (witness) j["witness"] = *witness;
  return j;
}

std::vector<PartnerSweepLine> partner_sweep(const std::vector<Int>& ells, int v_max, Int w_max) {
  std::vector<PartnerSweepLine> out;
  for (Int ell : ells) {
    for (int v = 0; v <= v_max; ++v) {
      PartnerSweepLine line;
      line.ell = ell;
      line.c = ipow(ell, v);
      for (Int w = 1; w <= w_max; ++w) {
        if (!is_admissible_triple(w, line.c, ell)) continue;
        ++line.tested;
        try {
          infer_partner_w(w, line.c, ell);
        } catch (const CounterexampleError& e) {
          ++line.counterexamples;
          if (!line.witness) line.witness = e.what();
        }
      }
      out.push_back(std::move(line));
    }
  }
  return out;
}

TransferRecord transfer(const SpehRecord& source) {
  if (source.r < 1 || source.deg < 1) throw DomainError("transfer: malformed source record");
  Int t = 0;
  try {
    t = t_of(source.w, source.c, source.ell);
  } catch (const InconsistencyError& e) {
    throw DomainError(std::string("transfer: inadmissible invariants: ") + e.what());
  }
  if (t != source.t) {
    throw DomainError("transfer: t=" + std::to_string(source.t) + " but t(w, c) = " + std::to_string(t));
  }
  TransferRecord rec{source, source, zelevinski_sign(source.r)};
  rec.target.r = 1;
  rec.target.deg = source.deg;
  return rec;
}

std::vector<TransferRecord> transfer_batch(const std::vector<SpehRecord>& sources, unsigned threads) {
  return parallel_map(sources.size(), [&](std::size_t i) { return transfer(sources[i]); }, threads);
}

bool same_invariants(const SpehRecord& x, const SpehRecord& y) {
  return std::tie(x.n, x.c, x.w, x.t, x.level) == std::tie(y.n, y.c, y.w, y.t, y.level);
}

nlohmann::json TransferCellReport::to_json() const {
  nlohmann::json out{{"check", "transfer_cell"}, {"w", w},           {"j", format_rational(j)},
                     {"m", m},                   {"a_count", a_count}, {"sources", sources},
                     {"images", images},         {"injective", injective}, {"preserved", preserved},
                     {"signs_ok", signs_ok},     {"pass", pass}};
  if (witness) out["witness"] = *witness;
  return out;
}

std::vector<TransferCellReport> transfer_universe(const Universe& u, unsigned threads) {
  std::vector<TransferCellReport> out;
  for (const auto& [w, j] : census_cells(u)) {
    for (Int m = 1; m <= u.config.m_max; ++m) {
      TransferCellReport rep;
      rep.w = w;
      rep.j = j;
      rep.m = m;
      rep.a_count = census_by_w(u, w, j, m).count;
      const auto sources = e_view(u, w, j, m);
      const auto images = transfer_batch(sources, threads);
      // Tuples are grouped into congruence classes; injectivity is on classes.
      std::set<std::tuple<ClassKey, Int, Int>> source_classes;
      std::set<std::pair<ClassKey, Int>> distinct;
      for (const auto& rec : images) {
        source_classes.emplace(rec.source.source_class, rec.source.deg, rec.source.r);
        distinct.emplace(rec.target.source_class, rec.target.deg);
        if (!same_invariants(rec.source, rec.target)) {
          rep.preserved = false;
          if (!rep.witness) rep.witness = "invariants changed for " + to_keyvalue(rec.source.source);
        }
        if (rec.sign * rec.sign != 1 || rec.sign != zelevinski_sign(rec.source.r)) rep.signs_ok = false;
      }
      rep.sources = source_classes.size();
      rep.images = distinct.size();
      rep.injective = rep.images == rep.sources;
      if (!rep.injective && !rep.witness) rep.witness = "two source classes share an image";
      rep.pass = rep.injective && rep.preserved && rep.signs_ok && static_cast<Int>(rep.images) == rep.a_count;
      if (!rep.pass && !rep.witness) {
        rep.witness = "image count " + std::to_string(rep.images) + " vs cell count " + std::to_string(rep.a_count);
      }
      if (rep.sources > 0 || rep.a_count > 0) out.push_back(std::move(rep));
    }
  }
  return out;
}

nlohmann::json to_json(const TransferRecord& t) {
  return {{"source", to_json(t.source)}, {"target", to_json(t.target)}, {"sign", t.sign}};
}

}  // namespace segcalc

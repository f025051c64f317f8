#pragma once

// Self-describing report documents, one per command invocation:
//
//   {"command": ..., "inputs": {...}, "outputs": {...},
//    "verdicts": {name: "ok" | "violated" | "not-applicable"}, "ok": bool}
//
// "ok" is false iff some verdict is "violated".

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "macaulay/binom.hpp"
#include "macaulay/hermitian.hpp"
#include "macaulay/ideal.hpp"
#include "macaulay/io.hpp"
#include "macaulay/oracle.hpp"

namespace macaulay::report {

using io::json;

enum class Verdict { ok, violated, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ok:
      return "ok";
    case Verdict::violated:
      return "violated";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

inline Verdict verdict_of(bool holds) { return holds ? Verdict::ok : Verdict::violated; }

/// Worst of two verdicts (violated > ok > not-applicable).
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::violated || b == Verdict::violated) return Verdict::violated;
  if (a == Verdict::ok || b == Verdict::ok) return Verdict::ok;
  return Verdict::not_applicable;
}

inline json finish(std::string command, json inputs, json outputs, json verdicts) {
  bool ok = true;
  for (const auto& [name, v] : verdicts.items())
    if (v == "violated") ok = false;
  return {{"command", std::move(command)},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"verdicts", std::move(verdicts)},
          {"ok", ok}};
}

inline bool report_ok(const json& report) { return report.value("ok", false); }

inline json rep_json(const MacaulayRep& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms) terms.push_back({{"top", io::format_integer(t.top)}, {"bottom", t.bottom}});
  return terms;
}

inline json interval_json(const IntegerInterval& i) {
  return {{"low", io::format_integer(i.low)}, {"high", io::format_integer(i.high)}};
}

inline json signature_json(const SignaturePair& s) { return {{"p", s.p}, {"q", s.q}}; }

inline Integer to_integer(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

// ---------------------------------------------------------------------------

inline json macrep(const Integer& A, int n) {
  const MacaulayRep rep = macaulay_rep(A, n);
  const Integer value = rep_value(rep);
  return finish("macrep", {{"A", io::format_integer(A)}, {"n", n}},
                {{"terms", rep_json(rep)}, {"value", io::format_integer(value)}, {"expansion", rep.to_string()}},
                {{"round_trip", to_string(verdict_of(value == A && rep.well_formed()))}});
}

inline json shift(const Integer& A, int n, long s, long t) {
  const MacaulayRep rep = macaulay_rep(A, n);
  return finish("shift", {{"A", io::format_integer(A)}, {"n", n}, {"s", s}, {"t", t}},
                {{"terms", rep_json(rep)}, {"value", io::format_integer(shift_apply(rep, {s, t}))}}, json::object());
}

/// Every split A + B = binomial(m+d, d) for 1 <= m <= m_max, 1 <= d <= d_max,
/// 1 <= s <= s_max.
inline json lemma_scan(int m_max, int d_max, int s_max) {
  std::size_t checked = 0;
  json failures = json::array();
  for (int m = 1; m <= m_max; ++m)
    for (int d = 1; d <= d_max; ++d) {
      const Integer total = binom_coeff(m + d, d);
      for (int s = 1; s <= s_max; ++s)
        for (Integer a = 0; a <= total; ++a) {
          ++checked;
          if (!split_identity_check(a, Integer(total - a), m, d, s))
            failures.push_back({{"A", io::format_integer(a)}, {"m", m}, {"d", d}, {"s", s}});
        }
    }
  return finish("lemma-scan", {{"m_max", m_max}, {"d_max", d_max}, {"s_max", s_max}},
                {{"checked", checked}, {"failures", failures}},
                {{"split_identity", to_string(verdict_of(failures.empty()))}});
}

inline json bridge(int n_min, int n_max, int d_min, int d_max) {
  json results = json::array();
  bool all = true;
  for (int n = n_min; n <= n_max; ++n)
    for (int d = d_min; d <= d_max; ++d) {
      const bool ok = equivalence_bridge_check(n, d);
      all = all && ok;
      results.push_back({{"n_vars", n}, {"d", d}, {"holds", ok}});
    }
  return finish("bridge", {{"n_min", n_min}, {"n_max", n_max}, {"d_min", d_min}, {"d_max", d_max}},
                {{"results", results}}, {{"equivalence_bridge", to_string(verdict_of(all))}});
}

inline const char* mode_name(RankMode mode) {
  switch (mode) {
    case RankMode::exact:
      return "exact";
    case RankMode::modular:
      return "modular";
    case RankMode::modular_checked:
      return "modular-checked";
  }
  return "?";
}

inline json ideals_input(const std::vector<RationalIdeal>& ideals) {
  if (ideals.size() == 1) return {{"ideal", io::ideal_json(ideals.front())}};
  return {{"ideals", io::corpus_json(ideals).at("ideals")}};
}

/// H_I(d) and H_{R/I}(d) for 0 <= d <= d_max.
inline json hilbert(const std::vector<RationalIdeal>& ideals, int d_max, RankMode mode = RankMode::exact) {
  json results = json::array();
  bool identity = true;
  for (const auto& ideal : ideals) {
    json h_ideal = json::array(), h_quotient = json::array();
    for (const auto& rec : hilbert_function(ideal, 0, d_max, mode)) {
      h_ideal.push_back(io::format_integer(rec.h_ideal));
      h_quotient.push_back(io::format_integer(rec.h_quotient));
      identity = identity && rec.h_ideal + rec.h_quotient == binom_coeff(ideal.n_vars - 1 + rec.degree, rec.degree);
    }
    results.push_back({{"n_vars", ideal.n_vars}, {"h_ideal", h_ideal}, {"h_quotient", h_quotient}});
  }
  json inputs = ideals_input(ideals);
  inputs["d_max"] = d_max;
  inputs["mode"] = mode_name(mode);
  return finish("hilbert", inputs, {{"results", results}},
                {{"dimension_identity", to_string(verdict_of(identity))}});
}

/// All three Macaulay bounds for 1 <= d < d_max on every ideal. Ideals in
/// one variable have no (n-1)-th representation and are not applicable.
inline json verify(const std::vector<RationalIdeal>& ideals, int d_max, RankMode mode = RankMode::exact) {
  json results = json::array();
  Verdict forward = Verdict::not_applicable, quotient = Verdict::not_applicable, reverse = Verdict::not_applicable;
  for (const auto& ideal : ideals) {
    if (ideal.n_vars < 2) {
      results.push_back({{"n_vars", ideal.n_vars}, {"applicable", false}});
      continue;
    }
    json checks = json::array();
    for (const auto& c : verify_macaulay(ideal, d_max, mode)) {
      checks.push_back({{"degree", c.degree},
                        {"h_ideal", io::format_integer(c.h_ideal)},
                        {"h_ideal_next", io::format_integer(c.h_ideal_next)},
                        {"ideal_lower_bound", io::format_integer(c.ideal_lower_bound)},
                        {"h_quotient", io::format_integer(c.h_quotient)},
                        {"h_quotient_next", io::format_integer(c.h_quotient_next)},
                        {"quotient_upper_bound", io::format_integer(c.quotient_upper_bound)},
                        {"reverse_upper_bound", io::format_integer(c.reverse_upper_bound)},
                        {"forward", to_string(verdict_of(c.forward_ok))},
                        {"quotient", to_string(verdict_of(c.quotient_ok))},
                        {"reverse", to_string(verdict_of(c.reverse_ok))}});
      forward = combine(forward, verdict_of(c.forward_ok));
      quotient = combine(quotient, verdict_of(c.quotient_ok));
      reverse = combine(reverse, verdict_of(c.reverse_ok));
    }
    results.push_back({{"n_vars", ideal.n_vars}, {"applicable", true}, {"checks", checks}});
  }
  json inputs = ideals_input(ideals);
  inputs["d_max"] = d_max;
  inputs["mode"] = mode_name(mode);
  return finish("verify", inputs, {{"results", results}},
                {{"ideal_bound", to_string(forward)},
                 {"quotient_bound", to_string(quotient)},
                 {"reverse_bound", to_string(reverse)}});
}

/// Rank, signature, rank of M * ||z||^2_{s,t} against its interval, and the
/// sum-of-squares bounds for M * ||z||^{2l}.
inline json hermitian(const HermitianBiform& m, SignedNorm norm, int l) {
  const int n = m.n_vars();
  const SignaturePair sig = biform_signature(m);
  const std::size_t r = biform_rank(m);
  json outputs{{"signature", signature_json(sig)}, {"rank", r}};
  json verdicts = json::object();

  const std::size_t product_rank = biform_rank(multiply_signed_norm(m, norm));
  outputs["signed_product"] = {{"s", norm.s}, {"t", norm.t}, {"rank", product_rank}};
  const Integer R = to_integer(product_rank);
  if (r >= 1 && n >= 2) {
    const auto interval = signed_norm_rank_interval(to_integer(r), n);
    outputs["rank_interval"] = interval_json(interval);
    verdicts["rank_interval"] = to_string(verdict_of(interval.contains(R)));
    if (static_cast<int>(r) <= n - 1) {
      const auto closed = signed_norm_rank_interval_closed_form(to_integer(r), n);
      outputs["rank_interval_closed_form"] = interval_json(closed);
      verdicts["rank_interval_closed_form"] = to_string(verdict_of(closed.contains(R)));
    } else {
      verdicts["rank_interval_closed_form"] = to_string(Verdict::not_applicable);
    }
  } else {
    verdicts["rank_interval"] = to_string(Verdict::not_applicable);
    verdicts["rank_interval_closed_form"] = to_string(Verdict::not_applicable);
  }

  const HermitianBiform f = multiply_norm_power(m, l);
  const SignaturePair fsig = biform_signature(f);
  const bool sos = fsig.q == 0;
  outputs["norm_power"] = {{"l", l}, {"signature", signature_json(fsig)}, {"rank", fsig.rank()}, {"sum_of_squares", sos}};
  const char* na = to_string(Verdict::not_applicable);
  if (sos && r >= 1 && n >= 2 && l >= 1) {
    const Integer p = to_integer(sig.p), q = to_integer(sig.q), Rl = to_integer(fsig.rank());
    const Rational p_bound = p_lower_bound(to_integer(r), n, l);
    outputs["p_lower_bound"] = io::format_rational(p_bound);
    verdicts["p_lower_bound"] = to_string(verdict_of(Rational(p) >= p_bound));
    if (sig.p >= 1) {
      const Integer shift_minus_one = q_upper_bound(p, n, l);
      const Integer shift_minus_l = q_upper_bound_shift_minus_l(p, n, l);
      outputs["q_upper_bound"] = {
          {"shift_minus_one", {{"shift", "(-1, l-1)"}, {"value", io::format_integer(shift_minus_one)}}},
          {"shift_minus_l", {{"shift", "(-l, l-1)"}, {"value", io::format_integer(shift_minus_l)}, {"holds", q <= shift_minus_l}}}};
      verdicts["q_upper_bound"] = to_string(verdict_of(q <= shift_minus_one));
    } else {
      verdicts["q_upper_bound"] = na;
    }
    const auto sos_interval = sos_rank_interval(p, q, n, l);
    outputs["sos_rank_interval"] = interval_json(sos_interval);
    verdicts["sos_rank_interval"] = to_string(verdict_of(sos_interval.contains(Rl)));
  } else {
    verdicts["p_lower_bound"] = na;
    verdicts["q_upper_bound"] = na;
    verdicts["sos_rank_interval"] = na;
  }
  return finish("hermitian", {{"biform", io::biform_json(m)}, {"s", norm.s}, {"t", norm.t}, {"l", l}}, outputs,
                verdicts);
}

/// Signature of M * ||z||^{2l} for l = 1..l_max and the least SOS exponent.
inline json min_sos(const HermitianBiform& m, int l_max) {
  json steps = json::array();
  std::optional<int> first;
  bool persistent = true;
  HermitianBiform f = m;
  for (int l = 1; l <= l_max; ++l) {
    f = multiply_signed_norm(f, {m.n_vars(), 0});
    const SignaturePair sig = biform_signature(f);
    steps.push_back({{"l", l}, {"signature", signature_json(sig)}, {"sum_of_squares", sig.q == 0}});
    if (sig.q == 0 && !first) first = l;
    if (first && sig.q != 0) persistent = false;
  }
  json outputs{{"steps", steps}, {"min_l", first ? json(*first) : json(nullptr)}};
  return finish("min-sos", {{"biform", io::biform_json(m)}, {"l_max", l_max}}, outputs,
                {{"sos_persistence", first ? to_string(verdict_of(persistent)) : to_string(Verdict::not_applicable)}});
}

inline const char* kind_name(oracle::CorpusKind k) {
  switch (k) {
    case oracle::CorpusKind::monomial:
      return "monomial";
    case oracle::CorpusKind::rational:
      return "rational";
    case oracle::CorpusKind::mixed:
      return "mixed";
  }
  return "?";
}

inline json corpus(const oracle::CorpusSpec& spec) {
  json doc = finish("corpus",
                    {{"parameters",
                      {{"min_vars", spec.min_vars}, {"max_vars", spec.max_vars}, {"min_gens", spec.min_gens},
                       {"max_gens", spec.max_gens}, {"min_degree", spec.min_degree}, {"max_degree", spec.max_degree},
                       {"count", spec.count}, {"kind", kind_name(spec.kind)}, {"seed", spec.seed}}}},
                    {{"count", spec.count}}, json::object());
  doc["ideals"] = io::corpus_json(oracle::random_corpus(spec)).at("ideals");
  return doc;
}

// ---------------------------------------------------------------------------

namespace detail {

inline void flatten(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && !v.front().is_structured()) {
    out << path << ": ";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    out << "\n";
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace detail

/// One "path: value" line per leaf.
inline std::string render_text(const json& report) {
  std::ostringstream out;
  detail::flatten(report, "", out);
  return out.str();
}

}  // namespace macaulay::report

// Command-line front end. Exit codes: 0 all verdicts ok or not-applicable,
// 1 some verdict violated, 2 malformed input or usage, 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "macaulay/macaulay.hpp"

namespace {

using macaulay::io::json;

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw macaulay::io::FormatError("cannot open \"" + path + "\"");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw macaulay::io::FormatError(std::string("invalid JSON: ") + e.what());
  }
}

macaulay::Integer parse_big(const std::string& text) { return macaulay::io::parse_integer(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macaulay representations, Hilbert functions and Hermitian signature bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "structured";
  std::string mode_text = "exact";
  std::uint64_t seed = 42;
  int d_max = 0;
  int l_max = 8;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"structured", "text"}));
  app.add_option("--mode", mode_text, "Rank computation")
      ->check(CLI::IsMember({"exact", "modular", "modular-checked"}));
  app.add_option("--seed", seed, "Seed for generated corpora");
  app.add_option("--d-max", d_max, "Largest degree (default depends on the command)")->check(CLI::Range(1, 60));
  app.add_option("--l-max", l_max, "Largest norm power tried by min-sos")->check(CLI::Range(1, 40));

  std::string a_text, file;
  int n = 0;
  long s = 0, t = 0;

  auto* macrep = app.add_subcommand("macrep", "n-th Macaulay representation of A");
  macrep->add_option("A", a_text)->required();
  macrep->add_option("n", n)->required()->check(CLI::Range(1, 1000));

  auto* shift = app.add_subcommand("shift", "Shift operator A_(n)|_s^t");
  shift->add_option("A", a_text)->required();
  shift->add_option("n", n)->required()->check(CLI::Range(1, 1000));
  shift->add_option("s", s)->required();
  shift->add_option("t", t)->required();

  int m_max = 6, s_max = 3;
  auto* lemma = app.add_subcommand("lemma-scan", "Exhaustive check of the split identity");
  lemma->add_option("--m-max", m_max)->check(CLI::Range(1, 20));
  lemma->add_option("--s-max", s_max)->check(CLI::Range(1, 20));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of an ideal (or corpus) file");
  hilbert->add_option("file", file, "Ideal document, corpus, or report; - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Check every Macaulay bound on an ideal (or corpus) file");
  verify->add_option("file", file, "Ideal document, corpus, or report; - for stdin")->required();

  int n_min = 2, n_max = 5, d_min = 1;
  auto* bridge = app.add_subcommand("bridge", "Check the ideal/quotient bound equivalence");
  bridge->add_option("--n-min", n_min)->check(CLI::Range(2, 20));
  bridge->add_option("--n-max", n_max)->check(CLI::Range(2, 20));
  bridge->add_option("--d-min", d_min)->check(CLI::Range(1, 60));

  int l = 1;
  auto* hermitian = app.add_subcommand("hermitian", "Signature, product rank and bounds for a biform file");
  hermitian->add_option("file", file, "Biform document or report; - for stdin")->required();
  auto* s_opt = hermitian->add_option("s", s, "Positive part of the signed norm (default n)");
  hermitian->add_option("t", t, "Negative part of the signed norm (default 0)");
  hermitian->add_option("l", l, "Norm power for the sum-of-squares bounds")->check(CLI::Range(1, 40));

  auto* min_sos = app.add_subcommand("min-sos", "Least l with M * ||z||^{2l} a sum of squared norms");
  min_sos->add_option("file", file, "Biform document or report; - for stdin")->required();

  macaulay::oracle::CorpusSpec spec;
  std::string kind = "rational";
  auto* corpus = app.add_subcommand("corpus", "Seeded random ideal corpus");
  corpus->add_option("--count", spec.count)->check(CLI::Range(0, 100000));
  corpus->add_option("--min-vars", spec.min_vars);
  corpus->add_option("--max-vars", spec.max_vars);
  corpus->add_option("--min-gens", spec.min_gens);
  corpus->add_option("--max-gens", spec.max_gens);
  corpus->add_option("--min-degree", spec.min_degree);
  corpus->add_option("--max-degree", spec.max_degree);
  corpus->add_option("--kind", kind)->check(CLI::IsMember({"monomial", "rational", "mixed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::map<std::string, macaulay::RankMode> modes{{"exact", macaulay::RankMode::exact},
                                                        {"modular", macaulay::RankMode::modular},
                                                        {"modular-checked", macaulay::RankMode::modular_checked}};
  const auto mode = modes.at(mode_text);
  const auto degree_or = [&](int fallback) { return d_max > 0 ? d_max : fallback; };

  json report;
  try {
    namespace r = macaulay::report;
    if (*macrep) {
      report = r::macrep(parse_big(a_text), n);
    } else if (*shift) {
      report = r::shift(parse_big(a_text), n, s, t);
    } else if (*lemma) {
      report = r::lemma_scan(m_max, degree_or(6), s_max);
    } else if (*hilbert) {
      report = r::hilbert(macaulay::io::parse_ideals(read_document(file)), degree_or(6), mode);
    } else if (*verify) {
      report = r::verify(macaulay::io::parse_ideals(read_document(file)), degree_or(6), mode);
    } else if (*bridge) {
      report = r::bridge(n_min, n_max, d_min, degree_or(5));
    } else if (*hermitian) {
      const auto m = macaulay::io::parse_biform(read_document(file));
      if (s_opt->count() == 0) {
        s = m.n_vars();
        t = 0;
      }
      if (s < 0 || t < 0 || s + t != m.n_vars())
        throw macaulay::io::FormatError("signed norm needs s, t >= 0 with s + t = n_vars");
      report = r::hermitian(m, {static_cast<int>(s), static_cast<int>(t)}, l);
    } else if (*min_sos) {
      report = r::min_sos(macaulay::io::parse_biform(read_document(file)), l_max);
    } else if (*corpus) {
      spec.seed = seed;
      spec.kind = kind == "monomial" ? macaulay::oracle::CorpusKind::monomial
                  : kind == "mixed"  ? macaulay::oracle::CorpusKind::mixed
                                     : macaulay::oracle::CorpusKind::rational;
      spec.validate();
      report = r::corpus(spec);
    }
  } catch (const macaulay::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (format == "text")
    std::cout << macaulay::report::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return macaulay::report::report_ok(report) ? 0 : 1;
}

#include "clifun/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "clifun/charpoly.hpp"
#include "clifun/expression.hpp"
#include "clifun/specfun.hpp"

namespace clifun::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string sig = "";
  std::string fn = "exp";
  std::string method = "auto";
  std::string expression;
  std::string eps_seq;
  double imag_tol = 1e-10;
  double cluster_tol = -1.0;
  bool json_out = false;
  bool verbose = false;
  bool complex_ok = false;
  bool from_json = false;
};

std::vector<double> split_numbers(const std::string& s, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    double v = 0.0;
    const char* first = s.data() + start;
    const char* last = s.data() + end;
    while (first < last && *first == ' ') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw InvalidArgument(std::string("bad ") + what + ": " + s);
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

Signature parse_signature(const std::string& s) {
  const auto v = split_numbers(s, "--sig");
  if (v.size() != 2 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1]))
    throw InvalidArgument("--sig expects p,q");
  return Signature(static_cast<int>(v[0]), static_cast<int>(v[1]));
}

json terms_json(const CMV& Z, bool with_imag) {
  json terms = json::array();
  const int n = Z.signature().n();
  for (std::uint32_t m : grade_lex_order(n)) {
    const cplx v = Z[m];
    if (v == cplx(0.0)) continue;
    json t{{"blade", blade_name(Blade{m}, n)}, {"re", v.real()}};
    if (with_imag) t["im"] = v.imag();
    terms.push_back(std::move(t));
  }
  return terms;
}

MV from_json_terms(const Signature& sig, const json& doc) {
  if (doc.contains("signature")) {
    const auto s = doc.at("signature").get<std::vector<int>>();
    if (s.size() != 2 || s[0] != sig.p() || s[1] != sig.q())
      throw InvalidArgument("JSON signature does not match --sig");
  }
  MV out(sig);
  for (const auto& t : doc.at("terms")) {
    const std::string name = t.at("blade").get<std::string>();
    const MV b = name == "1" ? MV::scalar(sig, 1.0) : parse_multivector(sig, name);
    out += b * t.at("re").get<double>();
  }
  return out;
}

std::string list_text(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + format_number(v[i], 17);
  return s + "]";
}

std::string complex_text(cplx z) {
  if (z.imag() == 0.0) return format_number(z.real(), 6);
  return format_number(z.real(), 6) + (z.imag() < 0 ? " - " : " + ") +
         format_number(std::abs(z.imag()), 6) + "i";
}

json roots_json(const RootSet& rs) {
  json roots = json::array();
  for (const auto& c : rs.clusters)
    roots.push_back({{"re", c.value.real()}, {"im", c.value.imag()},
                     {"mult", c.multiplicity}});
  return roots;
}

std::string roots_text(const RootSet& rs) {
  std::string s;
  for (const auto& c : rs.clusters) {
    if (!s.empty()) s += ", ";
    s += complex_text(c.value);
    if (c.multiplicity > 1) s += " (x" + std::to_string(c.multiplicity) + ")";
  }
  return s;
}

RootSet clustered_roots(const CharPoly& chi, double cluster_tol) {
  RootOptions ro;
  ro.snap_tol = cluster_tol;
  RootSet rs = find_roots(chi, ro);
  return cluster_tol < 0 ? cluster_roots(std::move(rs))
                         : cluster_roots(std::move(rs), cluster_tol);
}

void verbose_spectrum(std::ostream& out, const MV& A, const CharPoly& chi,
                      const RootSet& roots, const MinimalPolyOptions& mopts) {
  out << "charpoly: " << list_text(chi.c) << (chi.exact ? " (exact)" : "") << "\n";
  out << "roots: " << roots_text(roots) << "\n";
  const Diagonalizability diag = is_diagonalizable(A, mopts);
  out << "minpoly: " << list_text(diag.minimal.coeffs) << "\n";
  if (!diag.minimal.warning.empty())
    out << "minpoly warning: " << diag.minimal.warning << "\n";
  out << "diagonalizable: " << (diag.diagonalizable ? "yes" : "no") << "\n";
}

int evaluate(const Settings& st, std::ostream& out, std::istream& in) {
  const Signature sig = parse_signature(st.sig);

  std::string source = st.expression;
  if (source == "-")
    source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());

  MV A(sig);
  if (st.from_json) {
    json doc;
    try {
      doc = json::parse(source);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    A = from_json_terms(sig, doc);
  } else {
    A = parse_multivector(sig, source);
  }

  SpectralOptions opts;
  opts.imag_tol = st.imag_tol;
  opts.cluster_tol = st.cluster_tol;
  opts.complex_ok = st.complex_ok;
  if (st.method == "coordinate")
    opts.method = Method::coordinate;
  else if (st.method == "basisfree")
    opts.method = Method::basis_free;
  if (!st.eps_seq.empty()) {
    opts.regularization.eps_sequence = split_numbers(st.eps_seq, "--eps-seq");
    opts.regularization.extrapolation_order = std::min<int>(
        2, static_cast<int>(opts.regularization.eps_sequence.size()) - 1);
    opts.regularization.validate();
  }

  json doc{{"signature", {sig.p(), sig.q()}}, {"function", st.fn}};

  if (st.fn == "charpoly" || st.fn == "minpoly" || st.fn == "det") {
    const CharPoly chi = faddeev_leverrier(A);
    const RootSet roots = clustered_roots(chi, st.cluster_tol);
    doc["charpoly"] = chi.c;
    doc["roots"] = roots_json(roots);
    std::string text;
    if (st.fn == "charpoly") {
      text = list_text(chi.c);
    } else if (st.fn == "minpoly") {
      const MinimalPoly mu = minimal_polynomial(A, opts.minimal);
      doc["minpoly"] = mu.coeffs;
      if (!mu.warning.empty()) doc["warning"] = mu.warning;
      text = list_text(mu.coeffs);
    } else {
      const double det = -chi.c.back();
      doc["det"] = det;
      text = format_number(det, 6);
    }
    if (st.json_out) {
      out << doc.dump(2) << "\n";
      return kOk;
    }
    out << text << "\n";
    if (st.verbose) verbose_spectrum(out, A, chi, roots, opts.minimal);
    return kOk;
  }

  if (st.fn == "inverse") {
    const MV inv = inverse(A);
    if (st.json_out) {
      doc["terms"] = terms_json(to_complex(inv), false);
      out << doc.dump(2) << "\n";
    } else {
      out << format_multivector(inv) << "\n";
    }
    return kOk;
  }

  const auto f = functions::by_name(st.fn);
  if (!f) throw InvalidArgument("unknown function: " + st.fn);
  const SpectralResult r = apply_function(A, *f, opts);
  const bool show_imag = st.complex_ok;

  if (st.json_out) {
    doc["terms"] = terms_json(show_imag ? r.complex_value : to_complex(r.value),
                              show_imag);
    doc["imag_residual"] = r.imag_residual;
    doc["path"] = to_string(r.path);
    doc["charpoly"] = r.charpoly.c;
    doc["roots"] = roots_json(r.roots);
    if (st.verbose && !r.notes.empty()) doc["notes"] = r.notes;
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << format_multivector(r.value) << "\n";
  if (show_imag && r.imag_residual > 0.0)
    out << "imaginary part: " << format_multivector(imag_part(r.complex_value)) << "\n";
  if (st.verbose) {
    verbose_spectrum(out, A, r.charpoly, r.roots, opts.minimal);
    out << "path: " << to_string(r.path) << "\n";
    out << "imag residual: " << format_number(r.imag_residual, 6) << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  Settings st;
  CLI::App app{"Functions of Clifford algebra multivectors", "clifun"};
  app.add_option("--sig", st.sig, "Signature p,q")->required();
  app.add_option("--fn", st.fn,
                 "exp|log|sinh|cosh|sin|cos|asinh|sqrt|pow:<r>|besselj0|"
                 "charpoly|minpoly|det|inverse")
      ->capture_default_str();
  app.add_option("--method", st.method, "coordinate|basisfree|auto")
      ->check(CLI::IsMember({"coordinate", "basisfree", "auto"}))
      ->capture_default_str();
  app.add_flag("--json", st.json_out, "JSON output");
  app.add_flag("--verbose", st.verbose, "Print spectral diagnostics");
  app.add_option("--imag-tol", st.imag_tol, "Realification tolerance")
      ->capture_default_str();
  app.add_option("--cluster-tol", st.cluster_tol,
                 "Root clustering tolerance (negative: automatic)")
      ->capture_default_str();
  app.add_option("--eps-seq", st.eps_seq, "Regularization eps values a,b,c");
  app.add_flag("--complex-ok", st.complex_ok, "Allow complex output");
  app.add_flag("--from-json", st.from_json, "Read the input as JSON output");
  app.add_option("expression", st.expression, "Multivector, or - for stdin")
      ->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return evaluate(st, out, in);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const RealificationError& e) {
    err << "realification error: " << e.what()
        << " (use --complex-ok for complex output)\n";
    return kDomain;
  } catch (const RegularizationError& e) {
    err << "regularization error: " << e.what() << "\n";
    return kRegularization;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedDimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace clifun::cli

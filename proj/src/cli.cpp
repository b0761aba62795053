#include "lrdens/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "lrdens/char_data.hpp"
#include "lrdens/classifier.hpp"
#include "lrdens/error.hpp"
#include "lrdens/tvalues.hpp"

namespace lrdens::cli {

using nlohmann::json;

namespace {

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json big_list(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(big(x));
  return arr;
}

/// Coefficients from the leading term down to the constant.
json poly_desc(const IntPoly& f) {
  json arr = json::array();
  for (long i = f.degree(); i >= 0; --i) arr.push_back(big(f.coeff(static_cast<std::size_t>(i))));
  return arr;
}

std::string frac(const Rational& q) { return to_fraction_string(q); }

std::string join(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ' ';
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput:
    case ErrorKind::ZeroLeadingCoefficient:
    case ErrorKind::IdenticallyZero:
      return kInvalidRecurrence;
    case ErrorKind::Degenerate:
    case ErrorKind::DegenerateW:
    case ErrorKind::NotSimpleRoots:
      return kDegenerate;
    case ErrorKind::StateSpaceCapExceeded:
    case ErrorKind::ModulusCapExceeded:
      return kCapExceeded;
    case ErrorKind::InvalidArgument:
    case ErrorKind::BadModulus:
    case ErrorKind::BadPrime:
      return kUsage;
    case ErrorKind::SingularSystem:
    case ErrorKind::NotFiniteCase:
    case ErrorKind::NotApplicable:
    case ErrorKind::Inconsistency:
      return kInternal;
  }
  return kInternal;
}

std::string tvalue_text(const TValue& v) {
  switch (v.kind) {
    case TValue::Kind::Finite: return std::to_string(v.value);
    case TValue::Kind::Infinite: return "inf";
    case TValue::Kind::CappedAtLeast: return ">=" + std::to_string(v.value);
  }
  return "";
}

std::string tvalue_status(const TValue& v) {
  if (v.ramified) return "ramified";
  switch (v.kind) {
    case TValue::Kind::Finite: return "finite";
    case TValue::Kind::Infinite: return "infinite";
    case TValue::Kind::CappedAtLeast: return "capped";
  }
  return "";
}

void require_nondegenerate(const CharData& cd) {
  if (!is_nondegenerate(cd)) throw Error(ErrorKind::Degenerate, "a ratio of distinct characteristic roots is a root of unity");
}

Decomposition checked_decompose(const Recurrence& rec, const CharData& cd) {
  Decomposition d = decompose(rec, cd);
  if (d.w_is_zero != un_over_n_recurrence_by_fit(rec))
    throw Error(ErrorKind::Inconsistency, "classifier routes disagree on whether u_n / n is a recurrence");
  return d;
}

int cmd_classify(const Recurrence& rec, bool csv, std::ostream& out) {
  const CharData cd = char_data(rec);
  const Decomposition d = checked_decompose(rec, cd);
  json j;
  j["w_is_zero"] = d.w_is_zero;
  j["B_hat"] = big(d.scale);
  j["w_char"] = poly_desc(d.w_char);
  j["w_init"] = big_list(d.w_init);
  j["v_char"] = poly_desc(d.v_char);
  j["v_init"] = big_list(d.v_init);
  j["nondegenerate"] = is_nondegenerate(cd);
  if (d.w_is_zero) j["A_u"] = big_list(enumerate_finite_A(rec, d));
  if (csv) {
    out << "w_is_zero,B_hat,w_char,w_init,v_char,v_init,nondegenerate,A_u\n";
    out << (d.w_is_zero ? "true" : "false") << ',' << d.scale.get_str() << ',' << join(j["w_char"]) << ','
        << join(j["w_init"]) << ',' << join(j["v_char"]) << ',' << join(j["v_init"]) << ','
        << (j["nondegenerate"].get<bool>() ? "true" : "false") << ',' << (d.w_is_zero ? join(j["A_u"]) : "") << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return kOk;
}

std::optional<Rational> gamma_of(const RunConfig& cfg) {
  if (cfg.gamma.empty()) return std::nullopt;
  return parse_rational(cfg.gamma);
}

int cmd_density(const Recurrence& rec, const RunConfig& cfg, bool csv, std::ostream& out, std::ostream& err) {
  DensityOptions opts;
  opts.sieve.state_cap = cfg.cap_states;
  opts.sieve.threads = cfg.threads;
  opts.window_cap = cfg.cap_window;
  opts.gamma = gamma_of(cfg);
  opts.seed = cfg.seed;
  const DensityReport rep = density_report(rec, cfg.x, cfg.y, cfg.pmax, opts);

  const Rational ratio_a(from_u64(rep.count_A), from_u64(rep.x));
  json j;
  j["x"] = rep.x;
  j["y"] = rep.y;
  j["pmax"] = rep.pmax;
  j["count_A"] = rep.count_A;
  j["count_C"] = rep.count_C;
  j["ratio_A"] = frac(ratio_a);
  j["empirical_C_ratio"] = frac(rep.empirical_C_ratio);
  j["mertens"] = frac(rep.mertens_product);
  j["finite"] = rep.finite_set.has_value();
  if (rep.finite_set) {
    j["A_u"] = big_list(*rep.finite_set);
    j["density"] = "0/1";
  }
  if (rep.delta) {
    j["delta_y"] = frac(rep.delta->delta);
    j["L"] = big(rep.delta->modulus);
    j["window"] = rep.delta->window;
    j["delta_bound_ok"] = rep.delta_bound_ok;
  }
  if (rep.delta_estimate) {
    j["delta_y_estimate"] = rep.delta_estimate->estimate;
    j["delta_y_std_error"] = rep.delta_estimate->std_error;
    j["delta_y_samples"] = rep.delta_estimate->samples;
  }
  if (rep.tail) {
    j["gamma"] = frac(rep.tail->gamma);
    j["tail_lo"] = frac(rep.tail->tail_lo);
    j["tail_hi"] = frac(rep.tail->tail_hi);
    j["tail_resolved"] = rep.tail->resolved;
    j["tail_capped"] = rep.tail->capped;
    j["tail_infinite"] = rep.tail->infinite;
    j["tail_ramified"] = rep.tail->ramified;
    j["P_gamma_members"] = rep.tail->members;
  }
  if (csv) {
    out << "x,count_A,ratio_A,delta_y,L,mertens,tail_lo,tail_hi\n";
    out << rep.x << ',' << rep.count_A << ',' << frac(ratio_a) << ','
        << (rep.delta ? frac(rep.delta->delta) : rep.finite_set ? "0/1" : "NA") << ','
        << (rep.delta ? rep.delta->modulus.get_str() : "NA") << ',' << frac(rep.mertens_product) << ','
        << (rep.tail ? frac(rep.tail->tail_lo) : "NA") << ',' << (rep.tail ? frac(rep.tail->tail_hi) : "NA") << '\n';
  } else {
    out << j.dump() << '\n';
  }
  if (!rep.delta_bound_ok)
    err << "warning: delta_y exceeds the empirical complement ratio by more than 2/sqrt(x)\n";
  if (rep.delta_estimate) {
    err << "delta_y window exceeds --cap-window; reported a Monte Carlo estimate instead\n";
    return kCapExceeded;
  }
  return kOk;
}

int cmd_delta(const Recurrence& rec, const RunConfig& cfg, bool csv, std::ostream& out, std::ostream& err) {
  const Rational mertens = mertens_product(cfg.y);
  try {
    const DeltaResult d = delta_y(rec, cfg.y, cfg.cap_window, cfg.cap_states);
    if (csv) {
      out << "y,delta_y,L,window,mertens\n";
      out << cfg.y << ',' << frac(d.delta) << ',' << d.modulus.get_str() << ',' << d.window << ',' << frac(mertens)
          << '\n';
    } else {
      json j;
      j["y"] = cfg.y;
      j["delta_y"] = frac(d.delta);
      j["L"] = big(d.modulus);
      j["window"] = d.window;
      j["mertens"] = frac(mertens);
      j["below_mertens_deficit"] = d.delta <= 1 - mertens;
      out << j.dump() << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ModulusCapExceeded) throw;
    err << e.what() << '\n';
    const DeltaEstimate est = delta_y_monte_carlo(rec, cfg.y, 200'000, cfg.seed);
    json j;
    j["y"] = cfg.y;
    j["delta_y_estimate"] = est.estimate;
    j["delta_y_std_error"] = est.std_error;
    j["delta_y_samples"] = est.samples;
    j["mertens"] = frac(mertens);
    out << j.dump() << '\n';
    return kCapExceeded;
  }
}

int cmd_tvalues(const Recurrence& rec, const RunConfig& cfg, bool csv, std::ostream& out) {
  const CharData cd = char_data(rec);
  require_nondegenerate(cd);
  const Rational gamma = gamma_of(cfg).value_or(default_gamma(cd.order()));
  const TProfile prof = t_profile(cd, cfg.pmax, gamma, cfg.threads);
  if (csv) {
    out << "prime,p_gamma_threshold,t_value,status,in_P_gamma\n";
    for (const auto& e : prof.entries)
      out << e.prime << ',' << e.threshold << ',' << tvalue_text(e.value) << ',' << tvalue_status(e.value) << ','
          << (e.member ? "true" : "false") << '\n';
    return kOk;
  }
  json j;
  j["gamma"] = frac(prof.gamma);
  j["pmax"] = cfg.pmax;
  json entries = json::array();
  for (const auto& e : prof.entries)
    entries.push_back({{"prime", e.prime},
                       {"p_gamma_threshold", e.threshold},
                       {"t_value", tvalue_text(e.value)},
                       {"status", tvalue_status(e.value)},
                       {"in_P_gamma", e.member}});
  j["entries"] = entries;
  j["members"] = prof.members();
  out << j.dump() << '\n';
  return kOk;
}

int cmd_bench(const Recurrence& rec, const RunConfig& cfg, bool csv, std::ostream& out) {
  SieveOptions opts;
  opts.threads = cfg.threads;
  opts.state_cap = cfg.cap_states;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = count_A_sieve(rec, cfg.x, opts);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (csv) {
    out << "x,count_A,threads,seconds\n" << cfg.x << ',' << count << ',' << cfg.threads << ',' << seconds << '\n';
  } else {
    json j{{"x", cfg.x}, {"count_A", count}, {"threads", cfg.threads}, {"seconds", seconds}};
    out << j.dump() << '\n';
  }
  return kOk;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.x < 1) throw Error(ErrorKind::InvalidArgument, "--x must be at least 1");
  if (cfg.y < 2) throw Error(ErrorKind::InvalidArgument, "--y must be at least 2");
  if (cfg.cap_window < 1 || cfg.cap_states < 1) throw Error(ErrorKind::InvalidArgument, "caps must be positive");
  if (cfg.threads < 1) throw Error(ErrorKind::InvalidArgument, "--threads must be positive");
  if (!cfg.gamma.empty()) {
    const Rational g = parse_rational(cfg.gamma);
    if (g <= 0 || g >= 1) throw Error(ErrorKind::InvalidArgument, "--gamma must lie in (0, 1)");
  }
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv")
    throw Error(ErrorKind::InvalidArgument, "--format must be json or csv");
}

bool is_decimal_integer(const std::string& s) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start) return false;
  return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

Recurrence parse_recurrence_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed recurrence JSON: ") + e.what());
  }
  auto ints = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
      throw Error(ErrorKind::InvalidArgument, std::string("missing integer array \"") + key + "\"");
    std::vector<BigInt> v;
    for (const auto& e : j[key]) {
      if (e.is_number_integer()) {
        v.emplace_back(e.is_number_unsigned() ? from_u64(e.get<std::uint64_t>())
                                              : BigInt(static_cast<long>(e.get<std::int64_t>())));
      } else if (e.is_string() && is_decimal_integer(e.get<std::string>())) {
        v.emplace_back(e.get<std::string>(), 10);
      } else
        throw Error(ErrorKind::InvalidArgument, std::string("non-integer entry in \"") + key + "\"");
    }
    return v;
  };
  return validate(ints("coeffs"), ints("initial"));
}

Rational parse_rational(const std::string& text) {
  Rational q;
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      q = Rational(text, 10);
    } else {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t scale = text.size() - dot - 1;
      q = Rational(BigInt(digits, 10), BigInt("1" + std::string(scale, '0'), 10));
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: " + text);
  }
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Recurrence> rec;
  try {
    validate_config(cfg);
    std::string text = cfg.rec_json;
    if (text.empty()) {
      if (cfg.rec_file.empty()) throw Error(ErrorKind::InvalidArgument, "no recurrence given (--rec or --rec-file)");
      std::ifstream in(cfg.rec_file);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + cfg.rec_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    try {
      rec = parse_recurrence_json(text);
    } catch (const Error& e) {
      err << "invalid recurrence: " << e.what() << '\n';
      return kInvalidRecurrence;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const std::string& c = cfg.command;
  const bool csv = cfg.format.empty() ? c == "tvalues" : cfg.format == "csv";
  try {
    if (c == "classify") return cmd_classify(*rec, csv, out);
    if (c == "density") return cmd_density(*rec, cfg, csv, out, err);
    if (c == "delta") return cmd_delta(*rec, cfg, csv, out, err);
    if (c == "tvalues") return cmd_tvalues(*rec, cfg, csv, out);
    if (c == "bench") return cmd_bench(*rec, cfg, csv, out);
    err << "unknown command: " << c << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace lrdens::cli

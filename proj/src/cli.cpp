#include "spinparadox/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "spinparadox/paradox.hpp"
#include "spinparadox/serialize.hpp"

namespace spinparadox::cli {

namespace {

constexpr int kMaxCliTwiceS = 30;

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return v;
}

Spin parse_spin(std::string_view text, int max_twice_s = kMaxCliTwiceS) {
  auto t = parse_half_integer(trim(text));
  if (!t || *t < 0) throw UsageError(fmt::format("invalid spin '{}': expected a non-negative integer or half-integer", text));
  if (*t > max_twice_s) {
    throw UsageError(fmt::format("spin {} exceeds the supported maximum {}", text, format_half_integer(max_twice_s)));
  }
  return Spin(*t);
}

int parse_m(std::string_view text, const Spin& spin, std::string_view what) {
  auto t = parse_half_integer(trim(text));
  if (!t) throw UsageError(fmt::format("invalid {} '{}'", what, text));
  if (!spin.contains(*t)) {
    throw UsageError(fmt::format("{} = {} is not in the spectrum of spin {}", what, text,
                                 format_half_integer(spin.twice_s())));
  }
  return *t;
}

std::string fmt_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  return fmt::format("{:.12g}", v);
}

std::string fmt_complex(Complex c) {
  const double re = std::abs(c.real()) < 1e-15 ? 0.0 : c.real();
  const double im = std::abs(c.imag()) < 1e-15 ? 0.0 : c.imag();
  if (im == 0.0) return fmt_real(re);
  if (re == 0.0) return fmt_real(im) + "i";
  return fmt::format("{}{}{}i", fmt_real(re), im < 0 ? "-" : "+", fmt_real(std::abs(im)));
}

std::string ket(int twice_m, const Axis& axis) {
  return fmt::format("|{}>_{}", format_signed_half_integer(twice_m), axis.label());
}

/// Left-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()));
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_matrix(std::ostream& os, const std::string& title, const OperatorMatrix& m) {
  os << title << '\n';
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& e : m.entries()) {
    cells.push_back(fmt_complex(e));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::string line = " ";
    for (std::size_t k = 0; k < m.dim(); ++k) {
      const auto& c = cells[i * m.dim() + k];
      line += std::string(width - c.size() + 2, ' ') + c;
    }
    os << line << '\n';
  }
}

enum class Format { json, csv, table };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw UsageError(fmt::format("unknown format '{}': expected json, csv or table", text));
}

void require_no_csv(Format f, std::string_view command) {
  if (f == Format::csv) throw UsageError(fmt::format("csv output is not available for '{}'", command));
}

std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  std::optional<std::string> text = flag;
  std::string source = "--seed";
  if (!text) {
    if (const char* env = std::getenv(kSeedEnvVar)) {
      text = env;
      source = kSeedEnvVar;
    }
  }
  if (!text) return kDefaultSeed;
  const std::string t = trim(*text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw UsageError(fmt::format("invalid seed '{}' from {}: expected an unsigned 64-bit integer", *text, source));
  }
  return v;
}

// ---- subcommands ---------------------------------------------------------

struct Options {
  std::string format = "table";
  std::optional<std::string> output;
  std::optional<std::string> seed;
  std::string spin;
  // expand
  std::string axis = "x";
  std::string m;
  std::string basis = "z";
  // simulate
  std::optional<std::string> init;
  std::string sequence;
  std::optional<std::string> condition;
  long long shots = 1'000'000;
  unsigned threads = 1;
  // paradox
  std::string max_spin = "10";
  // falsify
  std::string vx;
  std::string vz;
};

void cmd_ops(const Options& o, Format f, std::ostream& os) {
  require_no_csv(f, "ops");
  const Spin spin = parse_spin(o.spin);
  const auto ops = spin_operators(spin);
  const auto s2 = casimir(spin);
  if (f == Format::json) {
    Json j;
    j["spin"] = to_json(spin);
    Json list = Json::array();
    auto add = [&](const char* name, const OperatorMatrix& m) {
      Json e;
      e["name"] = name;
      e["units"] = m.units().label();
      e["matrix"] = matrix_to_json(m);
      list.push_back(std::move(e));
    };
    add("S_x", ops.x);
    add("S_y", ops.y);
    add("S_z", ops.z);
    add("S^2", s2);
    j["operators"] = std::move(list);
    os << j.dump(2) << '\n';
    return;
  }
  os << fmt::format("spin s = {} (dimension {}), basis m = +s ... -s\n", format_half_integer(spin.twice_s()), spin.dim());
  print_matrix(os, "S_x [hbar]", ops.x);
  print_matrix(os, "S_y [hbar]", ops.y);
  print_matrix(os, "S_z [hbar]", ops.z);
  print_matrix(os, "S^2 [hbar^2]", s2);
}

void cmd_expand(const Options& o, Format f, std::ostream& os) {
  require_no_csv(f, "expand");
  const Spin spin = parse_spin(o.spin);
  const Axis axis = parse_axis(o.axis);
  const Axis basis = parse_axis(o.basis);
  const int twice_m = parse_m(o.m, spin, "m");
  const auto state = axis_eigenstate(spin, twice_m, axis);
  const auto e = expand(state, spin, basis);
  if (f == Format::json) {
    Json j = to_json(e);
    j["state"] = Json{{"axis", to_json(axis)}, {"twice_m", twice_m}};
    os << j.dump(2) << '\n';
    return;
  }
  os << fmt::format("spin s = {}: {} expanded in the {} eigenbasis\n", format_half_integer(spin.twice_s()),
                    ket(twice_m, axis), basis.label());
  Table t({"m [hbar]", "re", "im", "|amplitude|^2"});
  for (const auto& term : e.amplitudes) {
    t.add({format_signed_half_integer(term.twice_m), fmt_real(term.amplitude.real()), fmt_real(term.amplitude.imag()),
           fmt_real(std::norm(term.amplitude))});
  }
  t.print(os);
}

void cmd_simulate(const Options& o, Format f, std::ostream& os) {
  const Spin spin = parse_spin(o.spin);
  const std::uint64_t seed = resolve_seed(o.seed);
  const InitSpec init = o.init ? parse_init(*o.init) : InitSpec{Axis::z(), spin.twice_s()};
  if (!spin.contains(init.twice_m)) {
    throw UsageError(fmt::format("initial m = {} is not in the spectrum of spin {}",
                                 format_signed_half_integer(init.twice_m), format_half_integer(spin.twice_s())));
  }
  const auto axes = parse_sequence(o.sequence);
  std::optional<Condition> condition;
  if (o.condition) {
    condition = parse_condition(*o.condition);
    if (condition->step >= axes.size()) {
      throw UsageError(fmt::format("condition step {} is outside a sequence of {} measurements", condition->step,
                                   axes.size()));
    }
    if (!spin.contains(condition->twice_m)) {
      throw UsageError(fmt::format("condition outcome {} is not in the spectrum of spin {}",
                                   format_signed_half_integer(condition->twice_m), format_half_integer(spin.twice_s())));
    }
  }
  if (o.shots < 1) throw UsageError(fmt::format("shots must be at least 1, got {}", o.shots));
  if (o.threads < 1) throw UsageError("threads must be at least 1");

  const auto initial = axis_eigenstate(spin, init.twice_m, init.axis);
  const auto stats = run_sequence(spin, initial, axes, static_cast<std::uint64_t>(o.shots), seed, condition, o.threads);

  std::optional<std::vector<Outcome>> expected;
  std::optional<std::vector<Rational>> exact;
  try {
    expected = final_step_distribution(spin, initial, axes, condition);
    exact = exact_final_step_distribution(spin, init.axis, init.twice_m, axes, condition);
  } catch (const ImpossibleOutcome&) {
    // the condition can never be met; there is no conditional distribution
  }

  const std::size_t last = axes.size() - 1;
  struct FinalRow {
    int twice_m;
    std::uint64_t count;
    std::optional<double> frequency;
    std::optional<double> expected;
    std::optional<Rational> exact;
    std::optional<double> sigma;
    std::optional<bool> within;
  };
  std::vector<FinalRow> rows;
  for (std::size_t i = 0; i < spin.dim(); ++i) {
    FinalRow r{spin.twice_m_at(i), stats.count_at(last, spin.twice_m_at(i)), {}, {}, {}, {}, {}};
    if (stats.accepted > 0) r.frequency = static_cast<double>(r.count) / static_cast<double>(stats.accepted);
    if (expected) r.expected = (*expected)[i].probability;
    if (exact) r.exact = (*exact)[i];
    if (r.frequency && r.expected) {
      const double p = *r.expected;
      r.sigma = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(stats.accepted));
      r.within = std::abs(*r.frequency - p) <= 3.0 * *r.sigma + 1e-12;
    }
    rows.push_back(r);
  }

  const std::string condition_text =
      condition ? fmt::format("step {} = {}", condition->step, format_signed_half_integer(condition->twice_m)) : "none";
  std::string sequence_text;
  for (std::size_t i = 0; i < axes.size(); ++i) sequence_text += (i ? "," : "") + axes[i].label();

  if (f == Format::json) {
    Json j = to_json(stats);
    j["initial"] = Json{{"axis", to_json(init.axis)}, {"twice_m", init.twice_m}};
    Json outcomes = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["twice_m"] = r.twice_m;
      e["count"] = r.count;
      e["frequency"] = r.frequency ? Json(*r.frequency) : Json(nullptr);
      e["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
      e["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
      e["sigma"] = r.sigma ? Json(*r.sigma) : Json(nullptr);
      e["within_3sigma"] = r.within ? Json(*r.within) : Json(nullptr);
      outcomes.push_back(std::move(e));
    }
    j["final_step"] = Json{{"axis", to_json(axes[last])}, {"outcomes", std::move(outcomes)}};
    os << j.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    os << fmt::format("# seed={},shots={},accepted={}\n", seed, stats.shots, stats.accepted);
    os << counts_to_csv(stats);
    return;
  }
  os << fmt::format("# seed: {}\n", seed);
  os << fmt::format("spin s = {}, initial {}, sequence {}, shots {}, condition {}\n", format_half_integer(spin.twice_s()),
                    ket(init.twice_m, init.axis), sequence_text, stats.shots, condition_text);
  os << fmt::format("accepted {} of {} shots\n\n", stats.accepted, stats.shots);
  Table chains({"chain [hbar]", "count"});
  for (auto it = stats.counts.rbegin(); it != stats.counts.rend(); ++it) {
    const auto& [chain, count] = *it;
    std::string c;
    for (std::size_t i = 0; i < chain.size(); ++i) c += (i ? " " : "") + format_signed_half_integer(chain[i]);
    chains.add({c, std::to_string(count)});
  }
  chains.print(os);
  os << fmt::format("\nfinal measurement along {} (condition {})\n", axes[last].label(), condition_text);
  Table t({"m [hbar]", "count", "frequency", "expected", "exact", "within 3 sigma"});
  for (const auto& r : rows) {
    t.add({format_signed_half_integer(r.twice_m), std::to_string(r.count), r.frequency ? fmt_real(*r.frequency) : "-",
           r.expected ? fmt_real(*r.expected) : "-", r.exact ? r.exact->str() : "-",
           r.within ? (*r.within ? "yes" : "no") : "-"});
  }
  t.print(os);
}

void cmd_paradox(const Options& o, Format f, std::ostream& os) {
  const Spin max_spin = parse_spin(o.max_spin, kMaxEnumerationTwiceS);
  if (max_spin.twice_s() < 1) throw UsageError("--max-spin must be at least 1/2");
  const auto reports = paradox_scan(max_spin.twice_s());
  std::vector<bool> feasible;
  for (const auto& r : reports) feasible.push_back(max_max_assignment_feasible(r.spin));

  if (f == Format::json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      Json j = to_json(reports[i]);
      j["feasible"] = static_cast<bool>(feasible[i]);
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    os << "s,twice_s,lhs,rhs,violated,feasible,joint_probability\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      os << fmt::format("{},{},{},{},{},{},{}\n", format_half_integer(r.spin.twice_s()), r.spin.twice_s(), fmt_real(r.lhs),
                        fmt_real(r.rhs), r.violated, static_cast<bool>(feasible[i]), r.joint_probability.str());
    }
    return;
  }
  Table t({"s", "2s^2 [hbar^2]", "s(s+1) [hbar^2]", "violated", "feasible", "P(max,max)"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    t.add({format_half_integer(r.spin.twice_s()), fmt_real(r.lhs), fmt_real(r.rhs), r.violated ? "true" : "false",
           feasible[i] ? "true" : "false", r.joint_probability.str()});
  }
  t.print(os);
}

std::string falsify_certificate(const FalsifyReport& r) {
  if (r.feasible) return {};
  if (r.required_vy_squared < Rational(0)) {
    return fmt::format("required v_y^2 = {} is negative", r.required_vy_squared.str());
  }
  if (r.required_vy_squared > r.max_vy_squared) {
    return fmt::format("required v_y^2 = {} exceeds the largest available square {}", r.required_vy_squared.str(),
                       r.max_vy_squared.str());
  }
  return fmt::format("required v_y^2 = {} is not the square of any spectrum value", r.required_vy_squared.str());
}

void cmd_falsify(const Options& o, Format f, std::ostream& os) {
  require_no_csv(f, "falsify");
  const Spin spin = parse_spin(o.spin, kMaxEnumerationTwiceS);
  const int vx = parse_m(o.vx, spin, "v_x");
  const int vz = parse_m(o.vz, spin, "v_z");
  const auto r = falsify(spin, vx, vz);
  const std::string certificate = falsify_certificate(r);
  if (f == Format::json) {
    Json j;
    j["spin"] = to_json(spin);
    j["twice_vx"] = vx;
    j["twice_vz"] = vz;
    j["required_vy_squared"] = to_json(r.required_vy_squared);
    j["max_vy_squared"] = to_json(r.max_vy_squared);
    j["feasible"] = r.feasible;
    Json w = Json::array();
    for (const auto& a : r.witnesses) w.push_back(to_json(a));
    j["witnesses"] = std::move(w);
    j["certificate"] = r.feasible ? Json(nullptr) : Json(certificate);
    os << j.dump(2) << '\n';
    return;
  }
  os << fmt::format("spin s = {}, v_x = {}, v_z = {} [hbar]\n", format_half_integer(spin.twice_s()),
                    format_signed_half_integer(vx), format_signed_half_integer(vz));
  os << fmt::format("required v_y^2 = s(s+1) - v_x^2 - v_z^2 = {} [hbar^2]\n", r.required_vy_squared.str());
  os << fmt::format("largest available v_y^2 = {} [hbar^2]\n", r.max_vy_squared.str());
  os << fmt::format("feasible: {}\n", r.feasible ? "true" : "false");
  for (const auto& a : r.witnesses) {
    os << fmt::format("witness (v_x, v_y, v_z) = ({}, {}, {})\n", format_signed_half_integer(a.twice_vx),
                      format_signed_half_integer(a.twice_vy), format_signed_half_integer(a.twice_vz));
  }
  if (!r.feasible) os << "certificate: " << certificate << '\n';
}

void cmd_commutator(const Options& o, Format f, std::ostream& os) {
  require_no_csv(f, "commutator");
  const Spin spin = parse_spin(o.spin);
  const auto w = von_neumann_witness(spin);
  if (f == Format::json) {
    Json j;
    j["spin"] = to_json(spin);
    j["commutator_max_abs"] = w.commutator_max_abs;
    j["units"] = "hbar^4";
    j["nonzero"] = w.nonzero;
    os << j.dump(2) << '\n';
    return;
  }
  os << fmt::format("spin s = {}\nmax |[S_x^2, S_z^2]| = {} [hbar^4]\nnonzero: {}\n", format_half_integer(spin.twice_s()),
                    fmt_real(w.commutator_max_abs), w.nonzero ? "true" : "false");
}

}  // namespace

Axis parse_axis(std::string_view text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = trim(std::string_view(t).substr(1, t.size() - 2));
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "x") return Axis::x();
  if (lower == "y") return Axis::y();
  if (lower == "z") return Axis::z();
  const auto comma = t.find(',');
  if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
    throw UsageError(fmt::format("invalid axis '{}': expected x, y, z or theta,phi", text));
  }
  return Axis(parse_double(std::string_view(t).substr(0, comma), "theta"),
              parse_double(std::string_view(t).substr(comma + 1), "phi"));
}

std::vector<Axis> parse_sequence(std::string_view text) {
  std::vector<Axis> axes;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t end;
    if (text[i] == '(') {
      end = text.find(')', i);
      if (end == std::string_view::npos) throw UsageError(fmt::format("unbalanced parenthesis in sequence '{}'", text));
      ++end;
    } else {
      end = text.find(',', i);
      if (end == std::string_view::npos) end = text.size();
    }
    axes.push_back(parse_axis(text.substr(i, end - i)));
    if (end < text.size()) {
      if (text[end] != ',') throw UsageError(fmt::format("expected ',' after axis in sequence '{}'", text));
      ++end;
      if (end == text.size()) throw UsageError(fmt::format("trailing ',' in sequence '{}'", text));
    }
    i = end;
  }
  if (axes.empty()) throw UsageError("measurement sequence is empty");
  return axes;
}

InitSpec parse_init(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos) throw UsageError(fmt::format("invalid initial state '{}': expected axis:m", text));
  const auto m = parse_half_integer(trim(text.substr(colon + 1)));
  if (!m) throw UsageError(fmt::format("invalid initial m in '{}'", text));
  return {parse_axis(text.substr(0, colon)), *m};
}

Condition parse_condition(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw UsageError(fmt::format("invalid condition '{}': expected step=m", text));
  const std::string step_text = trim(text.substr(0, eq));
  std::size_t step = 0;
  auto [ptr, ec] = std::from_chars(step_text.data(), step_text.data() + step_text.size(), step);
  if (step_text.empty() || ec != std::errc{} || ptr != step_text.data() + step_text.size()) {
    throw UsageError(fmt::format("invalid condition step in '{}'", text));
  }
  const auto m = parse_half_integer(trim(text.substr(eq + 1)));
  if (!m) throw UsageError(fmt::format("invalid condition outcome in '{}'", text));
  return {step, *m};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spin-s operator algebra, sequential measurement simulation and value-assignment checks",
               "spinparadox"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: json, csv or table")->capture_default_str();
  app.add_option("--output", o.output, "Write output to this file instead of stdout");
  app.add_option("--seed", o.seed, fmt::format("Random seed (default ${} or {})", kSeedEnvVar, kDefaultSeed));

  auto* ops = app.add_subcommand("ops", "Print S_x, S_y, S_z and S^2");
  ops->add_option("--spin", o.spin, "Spin quantum number, e.g. 2 or 3/2")->required();

  auto* exp = app.add_subcommand("expand", "Expand an axis eigenstate in another axis' eigenbasis");
  exp->add_option("--spin", o.spin, "Spin quantum number")->required();
  exp->add_option("--axis", o.axis, "Axis of the eigenstate: x, y, z or theta,phi")->capture_default_str();
  exp->add_option("--m", o.m, "Eigenvalue m of the state")->required();
  exp->add_option("--basis", o.basis, "Axis whose eigenbasis to expand in")->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "Monte Carlo of a sequential Stern-Gerlach chain");
  sim->add_option("--spin", o.spin, "Spin quantum number")->required();
  sim->add_option("--init", o.init, "Initial eigenstate axis:m (default z:+s)");
  sim->add_option("--sequence", o.sequence, "Measurement axes, e.g. x,z or x,(0.5,1.0)")->required();
  sim->add_option("--condition", o.condition, "Keep only shots with step=m, e.g. 0=+2");
  sim->add_option("--shots", o.shots, "Number of shots")->capture_default_str();
  sim->add_option("--threads", o.threads, "Worker threads (output does not depend on this)")->capture_default_str();

  auto* par = app.add_subcommand("paradox", "Scan 2s^2 > s(s+1) and max-max feasibility over spins");
  par->add_option("--max-spin", o.max_spin, "Largest spin in the scan (at most 10)")->capture_default_str();

  auto* fal = app.add_subcommand("falsify", "Test whether values v_x, v_z extend to a full value assignment");
  fal->add_option("--spin", o.spin, "Spin quantum number (at most 10)")->required();
  fal->add_option("--vx", o.vx, "Pre-existing S_x value")->required();
  fal->add_option("--vz", o.vz, "Pre-existing S_z value")->required();

  auto* com = app.add_subcommand("commutator", "Largest entry of [S_x^2, S_z^2]");
  com->add_option("--spin", o.spin, "Spin quantum number")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "spinparadox: usage-error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format f = parse_format(o.format);
    std::ostringstream body;
    if (ops->parsed()) cmd_ops(o, f, body);
    else if (exp->parsed()) cmd_expand(o, f, body);
    else if (sim->parsed()) cmd_simulate(o, f, body);
    else if (par->parsed()) cmd_paradox(o, f, body);
    else if (fal->parsed()) cmd_falsify(o, f, body);
    else if (com->parsed()) cmd_commutator(o, f, body);

    if (o.output) {
      std::ofstream file(*o.output, std::ios::binary);
      if (!file) {
        err << "spinparadox: internal-error: cannot open output file " << *o.output << '\n';
        return kExitInternal;
      }
      file << body.str();
    } else {
      out << body.str();
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "spinparadox: usage-error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "spinparadox: usage-error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "spinparadox: usage-error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "spinparadox: internal-error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace spinparadox::cli

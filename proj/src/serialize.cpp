#include "spinparadox/serialize.hpp"

#include <sstream>

namespace spinparadox {

Json to_json(const Spin& spin) {
  Json j;
  j["twice_s"] = spin.twice_s();
  j["s"] = format_half_integer(spin.twice_s());
  return j;
}

Json to_json(const Rational& r) {
  Json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

Json to_json(const Axis& axis) {
  Json j;
  j["label"] = axis.label();
  j["theta"] = axis.theta();
  j["phi"] = axis.phi();
  return j;
}

Json matrix_to_json(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Expansion& e) {
  Json j;
  j["spin"] = to_json(e.spin);
  j["axis"] = to_json(e.axis);
  Json amps = Json::array();
  for (const auto& t : e.amplitudes) {
    Json a;
    a["twice_m"] = t.twice_m;
    a["re"] = t.amplitude.real();
    a["im"] = t.amplitude.imag();
    amps.push_back(std::move(a));
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

Json to_json(const SequenceStats& stats) {
  Json j;
  j["spin"] = to_json(stats.spin);
  Json axes = Json::array();
  for (const auto& a : stats.axes) axes.push_back(to_json(a));
  j["axes"] = std::move(axes);
  j["shots"] = stats.shots;
  j["seed"] = stats.seed;
  if (stats.condition) {
    j["condition"] = Json{{"step", stats.condition->step}, {"twice_m", stats.condition->twice_m}};
  } else {
    j["condition"] = nullptr;
  }
  j["accepted"] = stats.accepted;
  Json counts = Json::array();
  for (auto it = stats.counts.rbegin(); it != stats.counts.rend(); ++it) {
    const auto& [chain, count] = *it;
    Json c;
    c["chain"] = chain;
    c["count"] = count;
    counts.push_back(std::move(c));
  }
  j["counts"] = std::move(counts);
  return j;
}

Json to_json(const ParadoxReport& report) {
  Json j;
  j["twice_s"] = report.spin.twice_s();
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["violated"] = report.violated;
  j["min_sy_squared_needed"] = report.min_sy_squared_needed;
  j["joint_probability"] = to_json(report.joint_probability);
  return j;
}

Json to_json(const Assignment& a) {
  Json j;
  j["twice_vx"] = a.twice_vx;
  j["twice_vy"] = a.twice_vy;
  j["twice_vz"] = a.twice_vz;
  return j;
}

std::string counts_to_csv(const SequenceStats& stats) {
  std::ostringstream os;
  os << "chain,count\n";
  for (auto it = stats.counts.rbegin(); it != stats.counts.rend(); ++it) {
    const auto& [chain, count] = *it;
    for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? " " : "") << format_signed_half_integer(chain[i]);
    os << ',' << count << '\n';
  }
  return os.str();
}

}  // namespace spinparadox

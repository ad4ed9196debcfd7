#include "cmhd/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cmhd/io.hpp"

namespace cmhd {

void RunConfig::validate() const {
  thermo.validate();
  grid.validate();
  if (kappa <= 0 || kappa > 10) throw ValidationError("config: kappa out of range");
  if (eps <= 0 || eps > 10) throw ValidationError("config: eps out of range");
  if (theta0 < 1) throw ValidationError("config: theta0 must be >= 1");
  if (alpha < 7) throw ValidationError("config: alpha must be >= 7");
  if (steps < 1 || steps > 10000) throw ValidationError("config: steps out of range");
  if (T <= 0 || T > 100) throw ValidationError("config: T out of range");
  if (std::abs(phi0_amplitude) > 1.0)
    throw ValidationError("config: inadmissible front, |phi0| must stay <= 1");
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  os << kSchema << "\n";
  auto put = [&](const char* k, const std::string& v) { os << k << " = " << v << "\n"; };
  auto putd = [&](const char* k, double v) { put(k, format_double(v)); };
  auto puti = [&](const char* k, long long v) { put(k, std::to_string(v)); };
  putd("thermo.A", thermo.A);
  putd("thermo.gamma", thermo.gamma);
  putd("thermo.p_bar", thermo.p_bar);
  putd("thermo.S_bar_plus", thermo.S_bar_plus);
  putd("thermo.S_bar_minus", thermo.S_bar_minus);
  puti("grid.n1", grid.n1);
  puti("grid.n2", grid.n2);
  putd("grid.a_wall", grid.a_wall);
  putd("grid.cfl", grid.cfl);
  putd("kappa", kappa);
  putd("eps", eps);
  putd("scheme.theta0", theta0);
  putd("scheme.delta", delta);
  puti("scheme.alpha", alpha);
  puti("scheme.steps", steps);
  putd("scheme.T", T);
  put("scenario", scenario);
  putd("scenario.phi0_amplitude", phi0_amplitude);
  puti("scenario.phi0_mode", phi0_mode);
  putd("scenario.perturb_amplitude", perturb_amplitude);
  put("output_dir", output_dir);
  puti("seed", static_cast<long long>(seed));
  return os.str();
}

RunConfig RunConfig::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kSchema)
    throw ValidationError("config: missing or unknown schema header");
  std::map<std::string, std::string> kv;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ValidationError("config: malformed line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  RunConfig c;
  auto getd = [&](const char* k, double& v) {
    auto it = kv.find(k);
    if (it != kv.end()) v = std::stod(it->second);
  };
  auto geti = [&](const char* k, auto& v) {
    auto it = kv.find(k);
    if (it != kv.end()) v = static_cast<std::decay_t<decltype(v)>>(std::stoll(it->second));
  };
  auto gets = [&](const char* k, std::string& v) {
    auto it = kv.find(k);
    if (it != kv.end()) v = it->second;
  };
  getd("thermo.A", c.thermo.A);
  getd("thermo.gamma", c.thermo.gamma);
  getd("thermo.p_bar", c.thermo.p_bar);
  getd("thermo.S_bar_plus", c.thermo.S_bar_plus);
  getd("thermo.S_bar_minus", c.thermo.S_bar_minus);
  geti("grid.n1", c.grid.n1);
  geti("grid.n2", c.grid.n2);
  getd("grid.a_wall", c.grid.a_wall);
  getd("grid.cfl", c.grid.cfl);
  getd("kappa", c.kappa);
  getd("eps", c.eps);
  getd("scheme.theta0", c.theta0);
  getd("scheme.delta", c.delta);
  geti("scheme.alpha", c.alpha);
  geti("scheme.steps", c.steps);
  getd("scheme.T", c.T);
  gets("scenario", c.scenario);
  getd("scenario.phi0_amplitude", c.phi0_amplitude);
  geti("scenario.phi0_mode", c.phi0_mode);
  getd("scenario.perturb_amplitude", c.perturb_amplitude);
  gets("output_dir", c.output_dir);
  geti("seed", c.seed);
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("config: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void RunConfig::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("config: cannot open " + path);
  f << serialize();
}

}  // namespace cmhd

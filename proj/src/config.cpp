#include "noisyqd/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace noisyqd {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double to_number(const std::string& text, const std::string& field) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(field + ": not a finite number: '" + text + "'");
  }
  return value;
}

template <typename Enum>
Enum lookup(const std::map<std::string, Enum>& table, const std::string& key, const std::string& field) {
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError(field + ": unknown value '" + key + "'");
  return it->second;
}

const std::map<std::string, ProductState> kProducts{
    {"gg", ProductState::gg}, {"ee", ProductState::ee}, {"eg", ProductState::eg}, {"ge", ProductState::ge}};
const std::map<std::string, BellState> kBells{{"psi_plus", BellState::PsiPlus},
                                              {"psi_minus", BellState::PsiMinus},
                                              {"phi_plus", BellState::PhiPlus},
                                              {"phi_minus", BellState::PhiMinus}};
const std::map<std::string, AlphaFamily> kFamilies{{"phi_alpha_plus", AlphaFamily::PhiAlphaPlus},
                                                   {"psi_alpha_plus", AlphaFamily::PsiAlphaPlus},
                                                   {"psi_alpha_minus", AlphaFamily::PsiAlphaMinus}};
const std::map<std::string, Sign> kSigns{{"plus", Sign::Plus}, {"minus", Sign::Minus}};

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

DensityMatrix InitialStateSpec::build() const {
  try {
    switch (kind) {
      case InitialKind::Product: return make_product(product);
      case InitialKind::Bell: return make_bell(bell);
      case InitialKind::Alpha: return make_alpha_state(family, value);
      case InitialKind::Beta: return make_beta_state(value);
      case InitialKind::CClass: return make_c_class(sign, c);
      case InitialKind::Werner: return make_werner(value);
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("initial: ") + e.what());
  }
  throw ConfigError("initial: unknown state kind");
}

InitialStateSpec parse_initial_state(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty() || parts[0].empty()) throw ConfigError("initial: empty state description");
  const std::string& kind = parts[0];
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw ConfigError("initial: wrong number of fields for '" + kind + "'");
    }
  };

  InitialStateSpec spec;
  if (kind == "product") {
    expect(2, 2);
    spec.kind = InitialKind::Product;
    spec.product = lookup(kProducts, parts[1], "initial");
  } else if (kind == "bell") {
    expect(2, 2);
    spec.kind = InitialKind::Bell;
    spec.bell = lookup(kBells, parts[1], "initial");
  } else if (kind == "alpha") {
    expect(3, 3);
    spec.kind = InitialKind::Alpha;
    spec.family = lookup(kFamilies, parts[1], "initial");
    spec.value = to_number(parts[2], "initial");
  } else if (kind == "beta") {
    expect(2, 2);
    spec.kind = InitialKind::Beta;
    spec.value = to_number(parts[1], "initial");
  } else if (kind == "c_class") {
    expect(3, 4);
    spec.kind = InitialKind::CClass;
    spec.sign = lookup(kSigns, parts[1], "initial");
    const double re = to_number(parts[2], "initial");
    const double im = parts.size() == 4 ? to_number(parts[3], "initial") : 0.0;
    spec.c = cplx(re, im);
  } else if (kind == "werner") {
    expect(2, 2);
    spec.kind = InitialKind::Werner;
    spec.value = to_number(parts[1], "initial");
  } else {
    throw ConfigError("initial: unknown state kind '" + kind + "'");
  }
  return spec;
}

std::string to_string(const InitialStateSpec& spec) {
  switch (spec.kind) {
    case InitialKind::Product: return "product:" + to_string(spec.product);
    case InitialKind::Bell: return "bell:" + to_string(spec.bell);
    case InitialKind::Alpha: return "alpha:" + to_string(spec.family) + ":" + format_number(spec.value);
    case InitialKind::Beta: return "beta:" + format_number(spec.value);
    case InitialKind::CClass:
      return std::string("c_class:") + (spec.sign == Sign::Plus ? "plus" : "minus") + ":" +
             format_number(spec.c.real()) + ":" + format_number(spec.c.imag());
    case InitialKind::Werner: return "werner:" + format_number(spec.value);
  }
  return "?";
}

void validate(const RunConfig& cfg) {
  (void)cfg.initial.build();
  const auto& n = cfg.noise;
  const auto& h = cfg.hamiltonian;
  if (!std::isfinite(h.delta0)) throw ConfigError("delta0: must be finite");
  if (!std::isfinite(h.omega0)) throw ConfigError("omega0: must be finite");
  if (!(n.gamma_delta >= 0.0) || !std::isfinite(n.gamma_delta)) {
    throw ConfigError("gamma_delta: must be a non-negative number");
  }
  if (!(n.gamma_omega >= 0.0) || !std::isfinite(n.gamma_omega)) {
    throw ConfigError("gamma_omega: must be a non-negative number");
  }
  if (n.topology == Topology::Local && (h.delta0 != 0.0 || h.omega0 != 0.0)) {
    throw ConfigError("topology: local noise has no coherent part; delta0 and omega0 must be 0");
  }
  const auto& e = cfg.evolution;
  if (!(e.t_end > 0.0) || !std::isfinite(e.t_end)) throw ConfigError("t_end: must be positive");
  if (!(e.dt > 0.0) || e.dt > e.t_end) throw ConfigError("dt: must satisfy 0 < dt <= t_end");
  if (e.record_every < 1) throw ConfigError("record_every: must be at least 1");
  if (e.dt * generator_scale(h, n) > 0.1) {
    throw ConfigError("dt: too large for the fastest rate (need dt * max(1, rates) <= 0.1)");
  }
}

RunConfig parse_config_text(const std::string& text) {
  static const std::set<std::string> kKeys{"initial", "delta0",  "omega0", "gamma_delta",  "gamma_omega",
                                           "topology", "t_end", "dt",     "record_every", "output"};
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (!kKeys.contains(key)) throw ParseError(line_no, "unknown key '" + key + "'");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
    if (values.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
    values[key] = value;
  }

  if (!values.contains("initial")) throw ConfigError("initial: required key is missing");

  RunConfig cfg;
  cfg.initial = parse_initial_state(values["initial"]);
  auto number = [&](const char* key, double fallback) {
    return values.contains(key) ? to_number(values[key], key) : fallback;
  };
  cfg.hamiltonian.delta0 = number("delta0", 0.0);
  cfg.hamiltonian.omega0 = number("omega0", 0.0);
  cfg.noise.gamma_delta = number("gamma_delta", 0.0);
  cfg.noise.gamma_omega = number("gamma_omega", 0.0);
  if (values.contains("topology")) {
    const std::string& t = values["topology"];
    if (t == "global") {
      cfg.noise.topology = Topology::Global;
    } else if (t == "local") {
      cfg.noise.topology = Topology::Local;
    } else {
      throw ConfigError("topology: expected 'global' or 'local', got '" + t + "'");
    }
  }

  double slowest = 0.0;
  for (double g : {cfg.noise.gamma_delta, cfg.noise.gamma_omega}) {
    if (g > 0.0) slowest = slowest == 0.0 ? g : std::min(slowest, g);
  }
  cfg.evolution.t_end = number("t_end", slowest > 0.0 ? 20.0 / slowest : 10.0);
  cfg.evolution.dt = number("dt", default_step(cfg.hamiltonian, cfg.noise));
  if (values.contains("record_every")) {
    const double r = to_number(values["record_every"], "record_every");
    if (r != std::floor(r) || r < 1 || r > 1e9) throw ConfigError("record_every: must be a positive integer");
    cfg.evolution.record_every = static_cast<int>(r);
  } else {
    cfg.evolution.record_every = 10;
  }
  if (values.contains("output")) cfg.output_path = values["output"];

  validate(cfg);
  return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace noisyqd

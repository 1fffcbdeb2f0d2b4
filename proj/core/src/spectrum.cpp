#include "spinchain/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace spinchain {

namespace {

constexpr double k_pi = std::numbers::pi;

double mode_argument(int k, const ChainParams& chain) {
  return 2.0 * k_pi * static_cast<double>(k) / static_cast<double>(chain.sites);
}

}  // namespace

void validate(const ChainParams& chain) {
  if (chain.sites < 3) {
    throw ConfigError("chain must have at least 3 sites, got " +
                      std::to_string(chain.sites));
  }
  if (!std::isfinite(chain.field) || !std::isfinite(chain.anisotropy) ||
      !std::isfinite(chain.three_site)) {
    throw ConfigError("chain parameters must be finite");
  }
}

void validate(const CouplingParams& coupling) {
  if (!std::isfinite(coupling.strength) || !std::isfinite(coupling.asymmetry)) {
    throw ConfigError("coupling parameters must be finite");
  }
  if (coupling.strength < 0.0) {
    throw ConfigError("coupling strength must be >= 0");
  }
  if (coupling.asymmetry < -1.0 || coupling.asymmetry > 1.0) {
    throw ConfigError("coupling asymmetry must lie in [-1, 1]");
  }
}

int mode_count(const ChainParams& chain) { return (chain.sites - 1) / 2; }

double dressed_field(const ChainParams& chain, const CouplingParams& coupling,
                     Sector sector) {
  switch (sector) {
    case Sector::uu:
      return chain.field + coupling.strength;
    case Sector::ud:
      return chain.field + coupling.strength * coupling.asymmetry;
    case Sector::du:
      return chain.field - coupling.strength * coupling.asymmetry;
    case Sector::dd:
      return chain.field - coupling.strength;
  }
  throw ConfigError("invalid sector");
}

double bogoliubov_angle(int k, double field, const ChainParams& chain) {
  const double x = mode_argument(k, chain);
  const double re = field - std::cos(x);
  const double im = chain.anisotropy * std::sin(x);
  if (re == 0.0 && im == 0.0) {
    throw DegenerateModeError(
        "Bogoliubov angle undefined for mode k=" + std::to_string(k) +
        ": field equals cos(2*pi*k/N) at zero anisotropy");
  }
  double angle = std::atan2(im, re);
  if (angle == -k_pi) {
    angle = k_pi;  // fold onto (-pi, pi]
  }
  return angle;
}

double single_particle_energy(int k, double field, const ChainParams& chain) {
  const double x = mode_argument(k, chain);
  return std::hypot(field - std::cos(x), chain.anisotropy * std::sin(x));
}

double mode_energy(int k, double field, const ChainParams& chain) {
  const double x = mode_argument(k, chain);
  return 2.0 * (single_particle_energy(k, field, chain) +
                chain.three_site * std::sin(2.0 * x));
}

double relative_angle(int k, Sector sector, const ChainParams& chain,
                      const CouplingParams& coupling) {
  const double dressed =
      bogoliubov_angle(k, dressed_field(chain, coupling, sector), chain);
  const double bare = bogoliubov_angle(k, chain.field, chain);
  return 0.5 * (dressed - bare);
}

ModeTable mode_table(const ChainParams& chain, const CouplingParams& coupling) {
  validate(chain);
  ModeTable table;
  const int m = mode_count(chain);
  table.modes.reserve(m);
  for (int k = 1; k <= m; ++k) {
    ModeData mode;
    mode.k = k;
    mode.angle_bare = bogoliubov_angle(k, chain.field, chain);
    for (int s = 0; s < 4; ++s) {
      const double field = dressed_field(chain, coupling, all_sectors[s]);
      mode.angle[s] = bogoliubov_angle(k, field, chain);
      mode.energy[s] = single_particle_energy(k, field, chain);
      mode.mode_energy[s] = mode_energy(k, field, chain);
      mode.rel_angle[s] = 0.5 * (mode.angle[s] - mode.angle_bare);
      if (mode.mode_energy[s] < 0.0) {
        table.negative_mode_energy[s] = true;
      }
    }
    table.modes.push_back(mode);
  }
  return table;
}

}  // namespace spinchain

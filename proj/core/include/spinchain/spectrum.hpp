#pragma once

#include <array>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

// Anisotropic XY ring with a three-site XZY+YZX term. The ring is
// diagonalized in momentum pairs (k, -k), k = 1..M with M = (N-1)/2;
// the unpaired momenta carry no pair dynamics and are excluded.
struct ChainParams {
  int sites = 0;            // N
  double field = 0.0;       // transverse field strength
  double anisotropy = 0.0;  // x-y coupling imbalance
  double three_site = 0.0;  // three-site interaction strength
};

// Coupling of the two central qubits to every chain site.
struct CouplingParams {
  double strength = 0.0;   // g, >= 0
  double asymmetry = 0.0;  // delta in [-1, 1]; 1 = only qubit A coupled
};

// Two-qubit basis state conditioning the chain's effective field.
// uu..dd map to |00>, |01>, |10>, |11>; the F14 coherence factor pairs
// uu with dd, the F23 factor pairs ud with du.
enum class Sector : int { uu = 0, ud = 1, du = 2, dd = 3 };

inline constexpr std::array<Sector, 4> all_sectors{Sector::uu, Sector::ud,
                                                   Sector::du, Sector::dd};

void validate(const ChainParams& chain);
void validate(const CouplingParams& coupling);

// Number of paired momenta, M = floor((N-1)/2).
int mode_count(const ChainParams& chain);

// Effective field seen by the chain in the given sector:
// field + g, field + g*delta, field - g*delta, field - g.
double dressed_field(const ChainParams& chain, const CouplingParams& coupling,
                     Sector sector);

// Branch-corrected Bogoliubov angle of mode k at the given field: the
// two-argument angle of (field - cos(2*pi*k/N), anisotropy*sin(2*pi*k/N)),
// in (-pi, pi]. Throws DegenerateModeError when both components vanish.
double bogoliubov_angle(int k, double field, const ChainParams& chain);

// Euclidean norm of the same vector; always >= 0.
double single_particle_energy(int k, double field, const ChainParams& chain);

// Quasiparticle energy 2*(single_particle_energy + three_site*sin(4*pi*k/N)).
// May be negative for strong three-site coupling; callers flag that case.
double mode_energy(int k, double field, const ChainParams& chain);

// Half the difference between the dressed and undressed Bogoliubov angles.
double relative_angle(int k, Sector sector, const ChainParams& chain,
                      const CouplingParams& coupling);

// Everything the decoherence product needs for one momentum pair.
struct ModeData {
  int k = 0;
  double angle_bare = 0.0;              // Bogoliubov angle at the bare field
  std::array<double, 4> angle{};        // dressed angle per sector
  std::array<double, 4> energy{};       // single-particle energy per sector
  std::array<double, 4> mode_energy{};  // quasiparticle energy per sector
  std::array<double, 4> rel_angle{};    // (angle - angle_bare)/2 per sector
};

struct ModeTable {
  std::vector<ModeData> modes;                 // k = 1..M, ascending
  std::array<bool, 4> negative_mode_energy{};  // any mode_energy < 0 per sector
};

ModeTable mode_table(const ChainParams& chain, const CouplingParams& coupling);

}  // namespace spinchain

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dspmem/errors.hpp"
#include "dspmem/types.hpp"

namespace dspmem {

/// Six-level Rb basis in the fixed order used throughout:
/// b = 5S1/2 F=1, c = 5S1/2 F=2, a = 5P1/2 F=1, e = 5P1/2 F=2,
/// f = 5P3/2 F=1, d = 6S1/2 F=1.
enum class Level : int { b = 0, c = 1, a = 2, e = 3, f = 4, d = 5 };

inline constexpr int kNumLevels = 6;

constexpr int index(Level l) { return static_cast<int>(l); }
const char* level_name(Level l);

/// One spontaneous-emission channel out of an excited level.
struct DecayChannel {
  Level upper;
  Level lower;
  double rate;    ///< total population decay rate of `upper` (rad/s)
  double branch;  ///< fraction of `rate` that ends in `lower`
};

struct LevelScheme {
  /// Rotating-frame diagonal of the Hamiltonian (rad/s), indexed by Level.
  std::array<double, kNumLevels> rotating_frame_energy{};
  std::vector<DecayChannel> decay_channels;

  void validate() const;
};

struct TransitionCoupling {
  std::string name;  ///< probe_a, probe_b, omega, omega1, omega2 or omega3
  Level upper = Level::a;
  Level lower = Level::b;
  enum class Kind { control, probe } kind = Kind::control;
  double wavelength = 0.0;     ///< m
  double dipole_moment = 0.0;  ///< C m
  double rabi_peak = 0.0;      ///< rad/s; peak Rabi rate for controls, 0 for probes
  double detuning = 0.0;       ///< rad/s
};

/// Envelope slots, fixed order for the per-step Rabi sample arrays.
enum CouplingSlot : int {
  kSlotProbeA = 0,
  kSlotProbeB = 1,
  kSlotOmega = 2,
  kSlotOmega1 = 3,
  kSlotOmega2 = 4,
  kSlotOmega3 = 5,
};

using RabiSample = std::array<complexd, 6>;

/// The six field-transition couplings. Construction rejects any set whose
/// graph differs from the modeled one (probe_a on b-a, probe_b on e-d,
/// omega on c-a, omega1 on c-f, omega2 on f-d, omega3 on b-e).
class CouplingSet {
 public:
  explicit CouplingSet(std::vector<TransitionCoupling> couplings);

  const std::vector<TransitionCoupling>& all() const { return couplings_; }
  const TransitionCoupling& by_name(const std::string& name) const;
  const TransitionCoupling& by_slot(int slot) const { return couplings_[static_cast<size_t>(slot)]; }

  static int slot(const std::string& name);

 private:
  std::vector<TransitionCoupling> couplings_;  // stored in slot order
};

struct MediumConfig {
  double density = 0.0;        ///< atoms / m^3
  double length = 0.0;         ///< m
  double beam_diameter = 0.0;  ///< m
  int spatial_points = 0;

  void validate() const;
};

/// Peak Rabi rate of a beam: Omega = d E0 / (2 hbar), E0 = sqrt(2P / (A eps0 c)),
/// A = pi (diameter/2)^2. Power 0 gives Omega 0; other non-positive inputs throw.
double power_to_rabi(double power, double beam_diameter, double dipole_moment,
                     double wavelength);

/// Assembles the rotating-frame Hamiltonian in units of hbar (entries rad/s)
/// from per-slot instantaneous Rabi amplitudes. H(upper,lower) = -Omega,
/// H(lower,upper) = -conj(Omega); diagonal from the level scheme.
class HamiltonianAssembler {
 public:
  HamiltonianAssembler(const LevelScheme& scheme, const CouplingSet& couplings);

  Matrix6cd operator()(const RabiSample& rabi) const;

 private:
  Matrix6cd diagonal_;
  std::array<std::pair<int, int>, 6> edges_;  // (upper, lower) index per slot
};

/// Contract form of the assembler: `rabi` maps coupling name to instantaneous
/// complex Rabi amplitude; a missing entry for a declared coupling throws.
Matrix6cd build_hamiltonian(const LevelScheme& scheme, const CouplingSet& couplings,
                            const std::map<std::string, complexd>& rabi);

/// One jump matrix per decay channel, L = sqrt(rate * branch / 2) |lower><upper|,
/// normalized for the dissipator 2 L rho L^+ - {L^+ L, rho}.
std::vector<Matrix6cd> build_lindblad_ops(const LevelScheme& scheme);

}  // namespace dspmem

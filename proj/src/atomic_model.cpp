#include "dspmem/atomic_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dspmem/constants.hpp"

namespace dspmem {

namespace {

constexpr double kBranchTol = 1e-12;

struct EdgeSpec {
  const char* name;
  Level upper;
  Level lower;
  TransitionCoupling::Kind kind;
};

// The modeled coupling graph, in slot order.
constexpr std::array<EdgeSpec, 6> kEdges{{
    {"probe_a", Level::a, Level::b, TransitionCoupling::Kind::probe},
    {"probe_b", Level::d, Level::e, TransitionCoupling::Kind::probe},
    {"omega", Level::a, Level::c, TransitionCoupling::Kind::control},
    {"omega1", Level::f, Level::c, TransitionCoupling::Kind::control},
    {"omega2", Level::d, Level::f, TransitionCoupling::Kind::control},
    {"omega3", Level::e, Level::b, TransitionCoupling::Kind::control},
}};

}  // namespace

const char* level_name(Level l) {
  static constexpr std::array<const char*, 6> names{"b", "c", "a", "e", "f", "d"};
  return names[static_cast<size_t>(index(l))];
}

void LevelScheme::validate() const {
  for (const auto& ch : decay_channels) {
    if (ch.rate < 0.0)
      throw ValidationError("decay rate of level " + std::string(level_name(ch.upper)) +
                            " is negative");
    if (ch.branch < 0.0 || ch.branch > 1.0)
      throw ValidationError("branching fraction out of [0,1] on level " +
                            std::string(level_name(ch.upper)));
    if (ch.upper == Level::b || ch.upper == Level::c)
      throw ValidationError("metastable level " + std::string(level_name(ch.upper)) +
                            " must not decay");
  }
  // Branching fractions out of each decaying level must sum to one.
  for (int u = 0; u < kNumLevels; ++u) {
    double sum = 0.0;
    bool any = false;
    for (const auto& ch : decay_channels) {
      if (index(ch.upper) == u) {
        sum += ch.branch;
        any = true;
      }
    }
    if (any && std::abs(sum - 1.0) > kBranchTol) {
      std::ostringstream os;
      os << "branching fractions of level " << level_name(static_cast<Level>(u))
         << " sum to " << sum << ", expected 1";
      throw ValidationError(os.str());
    }
  }
}

CouplingSet::CouplingSet(std::vector<TransitionCoupling> couplings) {
  if (couplings.size() != kEdges.size())
    throw ValidationError("coupling set must declare exactly 6 transitions");
  couplings_.resize(kEdges.size());
  std::array<bool, 6> seen{};
  for (auto& tc : couplings) {
    int s = slot(tc.name);
    const EdgeSpec& spec = kEdges[static_cast<size_t>(s)];
    if (seen[static_cast<size_t>(s)])
      throw ValidationError("duplicate coupling: " + tc.name);
    if (tc.upper != spec.upper || tc.lower != spec.lower)
      throw ValidationError("coupling " + tc.name + " must connect (" +
                            level_name(spec.lower) + "," + level_name(spec.upper) +
                            "), got (" + level_name(tc.lower) + "," +
                            level_name(tc.upper) + ")");
    if (tc.kind != spec.kind)
      throw ValidationError("coupling " + tc.name + " has the wrong kind");
    if (tc.wavelength <= 0.0)
      throw ValidationError("coupling " + tc.name + ": wavelength must be > 0");
    if (tc.dipole_moment <= 0.0)
      throw ValidationError("coupling " + tc.name + ": dipole_moment must be > 0");
    seen[static_cast<size_t>(s)] = true;
    couplings_[static_cast<size_t>(s)] = std::move(tc);
  }
}

const TransitionCoupling& CouplingSet::by_name(const std::string& name) const {
  return couplings_[static_cast<size_t>(slot(name))];
}

int CouplingSet::slot(const std::string& name) {
  for (size_t i = 0; i < kEdges.size(); ++i)
    if (name == kEdges[i].name) return static_cast<int>(i);
  throw ValidationError("unknown coupling name: " + name);
}

void MediumConfig::validate() const {
  if (density <= 0.0) throw ValidationError("medium density must be > 0");
  if (length <= 0.0) throw ValidationError("medium length must be > 0");
  if (beam_diameter <= 0.0) throw ValidationError("beam diameter must be > 0");
  if (spatial_points < 8) throw ValidationError("spatial_points must be >= 8");
}

double power_to_rabi(double power, double beam_diameter, double dipole_moment,
                     double wavelength) {
  using namespace constants;
  if (power < 0.0) throw ValidationError("beam power must be >= 0");
  if (beam_diameter <= 0.0) throw ValidationError("beam diameter must be > 0");
  if (dipole_moment <= 0.0) throw ValidationError("dipole moment must be > 0");
  if (wavelength <= 0.0) throw ValidationError("wavelength must be > 0");
  const double area = pi * (beam_diameter / 2.0) * (beam_diameter / 2.0);
  const double field = std::sqrt(2.0 * power / (area * eps0 * c0));
  return dipole_moment * field / (2.0 * hbar);
}

HamiltonianAssembler::HamiltonianAssembler(const LevelScheme& scheme,
                                           const CouplingSet& couplings) {
  diagonal_.setZero();
  for (int i = 0; i < kNumLevels; ++i)
    diagonal_(i, i) = scheme.rotating_frame_energy[static_cast<size_t>(i)];
  for (size_t s = 0; s < edges_.size(); ++s) {
    const TransitionCoupling& tc = couplings.by_slot(static_cast<int>(s));
    edges_[s] = {index(tc.upper), index(tc.lower)};
  }
}

Matrix6cd HamiltonianAssembler::operator()(const RabiSample& rabi) const {
  Matrix6cd h = diagonal_;
  for (size_t s = 0; s < edges_.size(); ++s) {
    const auto [u, l] = edges_[s];
    h(u, l) = -rabi[s];
    h(l, u) = -std::conj(rabi[s]);
  }
  return h;
}

Matrix6cd build_hamiltonian(const LevelScheme& scheme, const CouplingSet& couplings,
                            const std::map<std::string, complexd>& rabi) {
  RabiSample sample{};
  for (const auto& tc : couplings.all()) {
    auto it = rabi.find(tc.name);
    if (it == rabi.end())
      throw ValidationError("missing envelope for coupling " + tc.name);
    sample[static_cast<size_t>(CouplingSet::slot(tc.name))] = it->second;
  }
  return HamiltonianAssembler(scheme, couplings)(sample);
}

std::vector<Matrix6cd> build_lindblad_ops(const LevelScheme& scheme) {
  std::vector<Matrix6cd> ops;
  ops.reserve(scheme.decay_channels.size());
  for (const auto& ch : scheme.decay_channels) {
    const double partial = ch.rate * ch.branch;
    if (partial <= 0.0) continue;
    Matrix6cd op = Matrix6cd::Zero();
    op(index(ch.lower), index(ch.upper)) = std::sqrt(partial / 2.0);
    ops.push_back(op);
  }
  return ops;
}

}  // namespace dspmem

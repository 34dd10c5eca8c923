#include "qsi/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace qsi {

const char* role_name(Role role) {
  switch (role) {
    case Role::transfer: return "transfer";
    case Role::alice_qsi: return "alice_qsi";
    case Role::bob_qsi: return "bob_qsi";
    case Role::reference: return "reference";
  }
  return "unknown";
}

Role role_from_name(const std::string& name) {
  if (name == "transfer") return Role::transfer;
  if (name == "alice_qsi") return Role::alice_qsi;
  if (name == "bob_qsi") return Role::bob_qsi;
  if (name == "reference") return Role::reference;
  throw std::invalid_argument("unknown role \"" + name +
                              "\" (expected transfer, alice_qsi, bob_qsi, or "
                              "reference)");
}

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::set<std::string> seen;
  int transfer_count = 0;
  for (const Subsystem& s : subsystems_) {
    if (s.dim < 1)
      throw std::invalid_argument("subsystem \"" + s.label +
                                  "\" has dim < 1");
    if (!seen.insert(s.label).second)
      throw std::invalid_argument("duplicate subsystem label \"" + s.label +
                                  "\"");
    if (s.role == Role::transfer) ++transfer_count;
  }
  if (transfer_count > 1)
    throw std::invalid_argument("layout has more than one transfer subsystem");
}

Eigen::Index SubsystemLayout::total_dim() const {
  Eigen::Index d = 1;
  for (const Subsystem& s : subsystems_) d *= s.dim;
  return d;
}

bool SubsystemLayout::has_label(const std::string& label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < subsystems_.size(); ++k)
    if (subsystems_[k].label == label) return k;
  throw std::invalid_argument("unknown subsystem label \"" + label + "\"");
}

std::vector<std::size_t> SubsystemLayout::indices_of(
    const std::vector<std::string>& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const std::string& label : labels) out.push_back(index_of(label));
  return out;
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(subsystems_.size());
  for (const Subsystem& s : subsystems_) out.push_back(s.label);
  return out;
}

std::vector<std::string> SubsystemLayout::labels_with_role(Role role) const {
  std::vector<std::string> out;
  for (const Subsystem& s : subsystems_)
    if (s.role == role) out.push_back(s.label);
  return out;
}

SubsystemLayout SubsystemLayout::appended(const Subsystem& extra) const {
  std::vector<Subsystem> subs = subsystems_;
  subs.push_back(extra);
  return SubsystemLayout(std::move(subs));
}

namespace {

// Row strides in the full index space: first subsystem most significant.
std::vector<Eigen::Index> full_strides(const SubsystemLayout& layout) {
  const auto& subs = layout.subsystems();
  std::vector<Eigen::Index> strides(subs.size(), 1);
  for (std::size_t k = subs.size(); k-- > 1;)
    strides[k - 1] = strides[k] * subs[k].dim;
  return strides;
}

// Full-space offsets of every multi-index running over the given positions.
std::vector<Eigen::Index> subspace_offsets(
    const SubsystemLayout& layout, const std::vector<std::size_t>& positions) {
  const auto strides = full_strides(layout);
  const auto& subs = layout.subsystems();
  std::vector<Eigen::Index> offsets{0};
  for (std::size_t pos : positions) {
    std::vector<Eigen::Index> next;
    next.reserve(offsets.size() * subs[pos].dim);
    for (Eigen::Index base : offsets)
      for (Eigen::Index digit = 0; digit < subs[pos].dim; ++digit)
        next.push_back(base + digit * strides[pos]);
    offsets = std::move(next);
  }
  return offsets;
}

void require_known_unique(const SubsystemLayout& layout,
                          const std::vector<std::string>& labels,
                          const std::string& where) {
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    layout.index_of(label);  // throws on unknown label
    if (!seen.insert(label).second)
      throw std::invalid_argument(where + ": duplicate label \"" + label +
                                  "\"");
  }
}

}  // namespace

void validate_pure(const PureState& psi) {
  if (psi.amplitudes.size() != psi.layout.total_dim())
    throw std::invalid_argument(
        "pure state: amplitude count does not match the layout dimension");
  if (!psi.amplitudes.allFinite())
    throw std::invalid_argument("pure state: non-finite amplitude");
  const double norm2 = psi.amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "pure state: squared norm " << norm2 << " deviates from 1 by "
        << std::abs(norm2 - 1.0);
    throw std::invalid_argument(msg.str());
  }
}

void validate_state(const MultipartiteState& state) {
  if (state.rho.rows() != state.layout.total_dim() ||
      state.rho.cols() != state.layout.total_dim())
    throw std::invalid_argument(
        "state: density matrix does not match the layout dimension");
  if (!state.rho.allFinite())
    throw std::invalid_argument("state: non-finite entry");
  const double herm = hermiticity_deviation(state.rho);
  if (herm > 1e-10) {
    std::ostringstream msg;
    msg << "state: not Hermitian (deviation " << herm << " exceeds 1e-10)";
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = state.rho.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "state: trace " << tr.real() << " deviates from 1 by "
        << std::abs(tr - 1.0);
    throw std::invalid_argument(msg.str());
  }
  const double min_eig = eig_hermitian(state.rho).eigenvalues.minCoeff();
  if (min_eig < -1e-9) {
    std::ostringstream msg;
    msg << "state: not positive semidefinite (smallest eigenvalue " << min_eig
        << " below -1e-9)";
    throw std::invalid_argument(msg.str());
  }
}

MultipartiteState density_from_pure(const PureState& psi) {
  validate_pure(psi);
  return MultipartiteState{psi.layout,
                           psi.amplitudes * psi.amplitudes.adjoint()};
}

MultipartiteState partial_trace(const MultipartiteState& state,
                                const std::vector<std::string>& keep) {
  if (keep.empty())
    throw std::invalid_argument("partial_trace: keep set is empty");
  require_known_unique(state.layout, keep, "partial_trace");

  const auto& subs = state.layout.subsystems();
  std::vector<Subsystem> kept_subs;
  std::vector<std::size_t> kept_pos, traced_pos;
  const std::set<std::string> keep_set(keep.begin(), keep.end());
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (keep_set.count(subs[k].label)) {
      kept_pos.push_back(k);
      kept_subs.push_back(subs[k]);
    } else {
      traced_pos.push_back(k);
    }
  }

  const auto kept_offsets = subspace_offsets(state.layout, kept_pos);
  const auto traced_offsets = subspace_offsets(state.layout, traced_pos);
  const Eigen::Index dim = static_cast<Eigen::Index>(kept_offsets.size());

  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b)
      for (Eigen::Index t : traced_offsets)
        out(a, b) += state.rho(kept_offsets[a] + t, kept_offsets[b] + t);

  return MultipartiteState{SubsystemLayout(std::move(kept_subs)),
                           std::move(out)};
}

MultipartiteState permute(const MultipartiteState& state,
                          const std::vector<std::string>& new_order) {
  if (new_order.size() != state.layout.size())
    throw std::invalid_argument(
        "permute: new_order is not a permutation of the layout labels");
  require_known_unique(state.layout, new_order, "permute");

  const auto& subs = state.layout.subsystems();
  const auto old_strides = full_strides(state.layout);

  std::vector<Subsystem> new_subs;
  std::vector<std::size_t> old_pos;
  for (const std::string& label : new_order) {
    const std::size_t k = state.layout.index_of(label);
    old_pos.push_back(k);
    new_subs.push_back(subs[k]);
  }
  SubsystemLayout new_layout(std::move(new_subs));
  const auto new_strides = full_strides(new_layout);

  const Eigen::Index dim = state.layout.total_dim();
  std::vector<Eigen::Index> to_old(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index rest = i, old_index = 0;
    for (std::size_t p = 0; p < old_pos.size(); ++p) {
      const Eigen::Index digit = rest / new_strides[p];
      rest %= new_strides[p];
      old_index += digit * old_strides[old_pos[p]];
    }
    to_old[i] = old_index;
  }

  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out(i, j) = state.rho(to_old[i], to_old[j]);
  return MultipartiteState{std::move(new_layout), std::move(out)};
}

PureState purify(const MultipartiteState& state,
                 const std::string& ref_label) {
  if (state.layout.has_label(ref_label))
    throw std::invalid_argument("purify: reference label \"" + ref_label +
                                "\" collides with an existing subsystem");

  const HermitianEigen eig = eig_hermitian(state.rho);
  const double cutoff =
      kRelativeZeroCutoff * eig.eigenvalues.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> kept;  // descending eigenvalue order
  for (Eigen::Index r = eig.eigenvalues.size(); r-- > 0;)
    if (eig.eigenvalues[r] > cutoff) kept.push_back(r);
  const Eigen::Index rank = static_cast<Eigen::Index>(kept.size());

  const Eigen::Index dim = state.rho.rows();
  Vector psi = Vector::Zero(dim * rank);
  for (Eigen::Index r = 0; r < rank; ++r) {
    const double w = eig.eigenvalues[kept[r]];
    for (Eigen::Index i = 0; i < dim; ++i)
      psi[i * rank + r] = std::sqrt(w) * eig.eigenvectors(i, kept[r]);
  }
  psi /= std::sqrt(psi.squaredNorm());

  SubsystemLayout layout =
      state.layout.appended(Subsystem{ref_label, rank, Role::reference});
  return PureState{std::move(layout), std::move(psi)};
}

PureState maximally_entangled(Eigen::Index k) {
  if (k < 1)
    throw std::invalid_argument("maximally_entangled: k must be >= 1");
  SubsystemLayout layout(std::vector<Subsystem>{
      {"A", k, Role::transfer}, {"B", k, Role::reference}});
  Vector psi = Vector::Zero(k * k);
  for (Eigen::Index i = 0; i < k; ++i)
    psi[i * k + i] = 1.0 / std::sqrt(static_cast<double>(k));
  return PureState{std::move(layout), std::move(psi)};
}

namespace {

SubsystemLayout qubit_layout(int n) {
  std::vector<Subsystem> subs;
  for (int k = 0; k < n; ++k)
    subs.push_back(Subsystem{"q" + std::to_string(k + 1), 2,
                             k == 0 ? Role::transfer : Role::reference});
  return SubsystemLayout(std::move(subs));
}

}  // namespace

PureState bell_state() {
  Vector psi = Vector::Zero(4);
  psi[0] = psi[3] = 1.0 / std::sqrt(2.0);
  return PureState{qubit_layout(2), std::move(psi)};
}

PureState ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state: n must be >= 2");
  Vector psi = Vector::Zero(Eigen::Index(1) << n);
  psi[0] = psi[psi.size() - 1] = 1.0 / std::sqrt(2.0);
  return PureState{qubit_layout(n), std::move(psi)};
}

PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w_state: n must be >= 2");
  Vector psi = Vector::Zero(Eigen::Index(1) << n);
  for (int k = 0; k < n; ++k)
    psi[Eigen::Index(1) << (n - 1 - k)] = 1.0 / std::sqrt(double(n));
  return PureState{qubit_layout(n), std::move(psi)};
}

MultipartiteState werner_state(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("werner_state: p must lie in [0, 1]");
  Vector singlet = Vector::Zero(4);
  singlet[1] = 1.0 / std::sqrt(2.0);   // |01>
  singlet[2] = -1.0 / std::sqrt(2.0);  // |10>
  Matrix rho = p * (singlet * singlet.adjoint()) +
               (1.0 - p) * 0.25 * Matrix::Identity(4, 4);
  return MultipartiteState{qubit_layout(2), std::move(rho)};
}

SubsystemLayout default_layout(const std::vector<Eigen::Index>& dims) {
  std::vector<Subsystem> subs;
  for (std::size_t k = 0; k < dims.size(); ++k)
    subs.push_back(Subsystem{"s" + std::to_string(k + 1), dims[k],
                             k == 0 ? Role::transfer : Role::reference});
  return SubsystemLayout(std::move(subs));
}

PureState random_pure_state(const SubsystemLayout& layout,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector psi(layout.total_dim());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi[i] = Complex(re, im);
  }
  psi /= std::sqrt(psi.squaredNorm());
  return PureState{layout, std::move(psi)};
}

PureState random_pure_state(const std::vector<Eigen::Index>& dims,
                            std::uint64_t seed) {
  return random_pure_state(default_layout(dims), seed);
}

MultipartiteState random_mixed_state(const SubsystemLayout& layout,
                                     Eigen::Index rank, std::uint64_t seed) {
  if (rank < 1)
    throw std::invalid_argument("random_mixed_state: rank must be >= 1");
  std::string ref = "_ref";
  while (layout.has_label(ref)) ref += "_";
  const PureState psi = random_pure_state(
      layout.appended(Subsystem{ref, rank, Role::reference}), seed);
  return partial_trace(density_from_pure(psi), layout.labels());
}

MultipartiteState random_mixed_state(const std::vector<Eigen::Index>& dims,
                                     Eigen::Index rank, std::uint64_t seed) {
  return random_mixed_state(default_layout(dims), rank, seed);
}

MultipartiteState tensor_product(const MultipartiteState& a,
                                 const MultipartiteState& b) {
  std::vector<Subsystem> subs = a.layout.subsystems();
  for (const Subsystem& s : b.layout.subsystems()) subs.push_back(s);
  return MultipartiteState{SubsystemLayout(std::move(subs)),
                           tensor(a.rho, b.rho)};
}

MultipartiteState with_roles(const MultipartiteState& state,
                             const std::vector<Role>& roles) {
  if (roles.size() != state.layout.size())
    throw std::invalid_argument("with_roles: role count mismatch");
  std::vector<Subsystem> subs = state.layout.subsystems();
  for (std::size_t k = 0; k < subs.size(); ++k) subs[k].role = roles[k];
  return MultipartiteState{SubsystemLayout(std::move(subs)), state.rho};
}

MultipartiteState with_labels(const MultipartiteState& state,
                              const std::vector<std::string>& labels) {
  if (labels.size() != state.layout.size())
    throw std::invalid_argument("with_labels: label count mismatch");
  std::vector<Subsystem> subs = state.layout.subsystems();
  for (std::size_t k = 0; k < subs.size(); ++k) subs[k].label = labels[k];
  return MultipartiteState{SubsystemLayout(std::move(subs)), state.rho};
}

double purity(const MultipartiteState& state) {
  return (state.rho * state.rho).trace().real();
}

}  // namespace qsi

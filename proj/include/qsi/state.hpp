#pragma once

#include "qsi/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsi {

enum class Role { transfer, alice_qsi, bob_qsi, reference };

const char* role_name(Role role);
Role role_from_name(const std::string& name);

struct Subsystem {
  std::string label;
  Eigen::Index dim = 0;
  Role role = Role::reference;
};

/// Ordered subsystem list. The first subsystem is the most significant
/// tensor index. Labels are unique, dims >= 1, and at most one subsystem
/// carries the transfer role; partition construction enforces exactly one.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  Eigen::Index total_dim() const;

  bool has_label(const std::string& label) const;
  /// Position of a label; throws naming the label if unknown.
  std::size_t index_of(const std::string& label) const;
  std::vector<std::size_t> indices_of(
      const std::vector<std::string>& labels) const;

  std::vector<std::string> labels() const;
  std::vector<std::string> labels_with_role(Role role) const;

  SubsystemLayout appended(const Subsystem& extra) const;

 private:
  std::vector<Subsystem> subsystems_;
};

struct PureState {
  SubsystemLayout layout;
  Vector amplitudes;
};

struct MultipartiteState {
  SubsystemLayout layout;
  Matrix rho;
};

/// Throws naming the violated check and the measured deviation.
void validate_pure(const PureState& psi);
void validate_state(const MultipartiteState& state);

MultipartiteState density_from_pure(const PureState& psi);

/// Reduced state on the kept subsystems, in their original relative order.
MultipartiteState partial_trace(const MultipartiteState& state,
                                const std::vector<std::string>& keep);

/// Conjugates rho by the index permutation taking the layout to new_order.
MultipartiteState permute(const MultipartiteState& state,
                          const std::vector<std::string>& new_order);

/// Spectral purification: sum_i sqrt(w_i) |v_i>|i> with a fresh reference
/// subsystem of dimension rank(rho) appended last.
PureState purify(const MultipartiteState& state, const std::string& ref_label);

/// (1/sqrt k) sum_i |i>|i> on two subsystems of dimension k.
PureState maximally_entangled(Eigen::Index k);

// State factories. Default roles: first subsystem transfer, rest reference;
// callers reassign roles as needed.
PureState bell_state();
PureState ghz_state(int n);
PureState w_state(int n);
/// p |psi-><psi-| + (1-p) I/4 on two qubits.
MultipartiteState werner_state(double p);

SubsystemLayout default_layout(const std::vector<Eigen::Index>& dims);
PureState random_pure_state(const SubsystemLayout& layout, std::uint64_t seed);
PureState random_pure_state(const std::vector<Eigen::Index>& dims,
                            std::uint64_t seed);
/// Traces a rank-dimensional reference out of a seeded random pure state.
MultipartiteState random_mixed_state(const SubsystemLayout& layout,
                                     Eigen::Index rank, std::uint64_t seed);
MultipartiteState random_mixed_state(const std::vector<Eigen::Index>& dims,
                                     Eigen::Index rank, std::uint64_t seed);

/// Joint state on the concatenated layouts; labels must not collide.
MultipartiteState tensor_product(const MultipartiteState& a,
                                 const MultipartiteState& b);

MultipartiteState with_roles(const MultipartiteState& state,
                             const std::vector<Role>& roles);
MultipartiteState with_labels(const MultipartiteState& state,
                              const std::vector<std::string>& labels);

double purity(const MultipartiteState& state);

}  // namespace qsi

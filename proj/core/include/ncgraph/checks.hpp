#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgraph/classify.hpp"
#include "ncgraph/goursat.hpp"

namespace ncg {

enum class CheckStatus { pass, fail, not_applicable };
const char* to_string(CheckStatus s);

/// Predicted structure vs. brute-force observation for one check on one
/// group.  `status` is pass exactly when they match.
struct Verdict {
  std::string check_id;
  std::string group;
  CheckStatus status = CheckStatus::not_applicable;
  std::string predicted;
  std::string observed;
  std::string detail;  // minimal witness on failure
};

/// The check catalog, in canonical order.
const std::vector<std::string>& all_check_ids();

/// A group plus every derived object the checks need, built lazily and
/// cached.  For direct-product entries the factor contexts expose the
/// factor groups and lattices; the product's element (a, b) has index
/// a*|right| + b.
class GroupContext {
 public:
  explicit GroupContext(std::shared_ptr<const FiniteGroup> group,
                        std::uint32_t lattice_cap = kDefaultLatticeCap);

  void set_factors(std::shared_ptr<GroupContext> left,
                   std::shared_ptr<GroupContext> right);
  bool has_factors() const { return left_ != nullptr; }
  GroupContext& left() { return *left_; }
  GroupContext& right() { return *right_; }

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  std::uint32_t lattice_cap() const { return lattice_cap_; }

  bool lattice_available() const { return group_->order() <= lattice_cap_; }
  const SubgroupLattice& lattice();

  const StructuralPredicates& predicates();
  const DynBitset& centre();
  const ElementGraph& graph(GraphKind kind);
  const ComponentSummary& summary(GraphKind kind);
  const std::vector<std::vector<std::uint16_t>>& nc_distances();

  /// Z(M) member sets, one per lattice maximal id position.
  const std::vector<DynBitset>& maximal_centres();
  /// contains_not_centralizing[x] bit k set iff x in M_k \ Z(M_k).
  const std::vector<DynBitset>& contains_not_centralizing();

  std::optional<PGroupClassification> p_group_classification();
  std::optional<NilpotentClassification> nilpotent_classification();

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::uint32_t lattice_cap_;
  std::shared_ptr<GroupContext> left_, right_;

  std::optional<SubgroupLattice> lattice_;
  std::optional<StructuralPredicates> predicates_;
  std::optional<DynBitset> centre_;
  std::map<GraphKind, ElementGraph> graphs_;
  std::map<GraphKind, ComponentSummary> summaries_;
  std::optional<std::vector<std::vector<std::uint16_t>>> nc_dist_;
  std::optional<std::vector<DynBitset>> maximal_centres_;
  std::optional<std::vector<DynBitset>> cnc_;
  bool classified_p_ = false;
  std::optional<PGroupClassification> p_class_;
  bool classified_nilp_ = false;
  std::optional<NilpotentClassification> nilp_class_;
};

/// Runs one catalog check; hypotheses that fail yield not_applicable.
Verdict run_check(const std::string& check_id, GroupContext& ctx);

/// Runs every catalog check in canonical order.
std::vector<Verdict> verify_group(GroupContext& ctx);

}  // namespace ncg

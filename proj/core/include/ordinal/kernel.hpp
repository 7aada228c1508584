#pragma once

// Certificates for comparison judgments. A certificate is a derivation tree
// whose nodes are tagged with one of a small set of rules; premises of an
// infinitary node are produced by a generator. Constructors check their
// side conditions, and `verify` re-checks every visited node independently.
//
// Right-hand sides are compared up to reordering, duplicates and Zero
// members, and a list is identified with its finite sup.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordinal/compare.hpp"
#include "ordinal/names.hpp"

namespace ordinal {

enum class Rule {
  ZeroLe,
  ZeroLt,
  LeIntro,
  LtIntro,
  Weaken,
  Contract,
  LtToLe,
  TransLeLe,
  TransLtLe,
  TransLeLt,
  LtSucOfLe,
  LeOfLtSuc,
  SucLeOfLt,
  LtOfSucLe,
  SupLeIntro,
  SupLt,
  CutLeft,
  DropLeft,
};

std::string to_string(Rule r);

struct Certificate;
using Cert = std::shared_ptr<const Certificate>;
using CertGenerator = std::function<Cert(std::uint64_t)>;

struct Certificate {
  Rule rule = Rule::ZeroLe;
  Judgment conclusion;
  std::vector<Cert> premises;
  /// Set for infinitary nodes; premises is then empty.
  CertGenerator premise_gen;
  Index premise_index = Index::fin(0);
  /// Prefix width of an lt introduction.
  std::uint64_t width = 0;
  /// Extra rhs members of a weakening; members of a finite sup_le_intro.
  std::vector<Name> names;
  /// Member family of an infinitary sup_le_intro.
  std::optional<Family> members;

  bool infinitary() const { return static_cast<bool>(premise_gen); }
  Index premise_count() const;
  Cert premise(std::uint64_t i) const;
};

// -- Rhs identification -------------------------------------------------------

/// Sorted distinct idents of the non-Zero members; {0} for an all-Zero list.
std::vector<Ident> rhs_key(std::span<const Name> rhs);
bool rhs_equiv(std::span<const Name> a, std::span<const Name> b);

// -- Primitive rules ----------------------------------------------------------

Cert zero_le(std::vector<Name> rhs);
/// Requires some Node member.
Cert zero_lt(std::vector<Name> rhs);

/// a <= rhs from a_i < rhs for every index i of a (a must be a Node). Fin
/// premises are generated eagerly and checked; Nat premises stay lazy.
Cert le_intro(const Name& a, std::vector<Name> rhs, const CertGenerator& gen);

/// a < rhs from a <= (first m subordinals of each rhs member).
Cert lt_intro(const Name& a, std::vector<Name> rhs, std::uint64_t m, Cert inner);

Cert weaken(Cert p, std::vector<Name> extra);
/// Drops duplicate rhs members.
Cert contract(Cert p);
Cert lt_to_le(Cert p);

/// p: a <= [b], q: b <= rhs  gives  a <= rhs.
Cert trans_le_le(Cert p, Cert q);
/// p: a < [b], q: b <= rhs  gives  a < rhs.
Cert trans_lt_le(Cert p, Cert q);
/// p: a <= [b], q: b < rhs  gives  a < rhs.
Cert trans_le_lt(Cert p, Cert q);

/// a <= [b]  gives  a < [suc b].
Cert lt_suc_of_le(Cert p);
/// a < [suc b]  gives  a <= [b].
Cert le_of_lt_suc(Cert p);
/// b < [a]  gives  suc b <= [a].
Cert suc_le_of_lt(Cert p);
/// suc b <= [a]  gives  b < [a].
Cert lt_of_suc_le(Cert p);

/// b^k <= [c] for every k gives sup_finite(bs) <= [c].
Cert sup_le_intro(std::vector<Name> bs, std::vector<Cert> members);
/// Infinitary form over a Nat family of Nodes: sup_family(bs) <= [c].
Cert sup_le_intro(const Family& bs, const Name& c, const CertGenerator& gen);
/// p: a < [c], q: b < [c]  gives  sup(a, b) < [c].
Cert sup_lt(Cert p, Cert q);
/// p: c < [a], q: a <= [sup(b, c)]  gives  a <= [b].
Cert cut_left(Cert p, Cert q, const Name& b);
/// p: a < [sup(a, b)]  gives  a < [b].
Cert drop_left(Cert p, const Name& b);

// -- Derived constructors -----------------------------------------------------

/// a <= [a], by taking the single witness {i} for each subordinal a_i.
Cert refl(const Name& a);
/// b_j < [b].
Cert subordinal_lt(const Name& b, std::uint64_t j);
/// a_i <= [b_i] for every i (same index) gives a <= [b].
Cert pointwise(const Name& a, const Name& b, const CertGenerator& gen);

// -- Verification -------------------------------------------------------------

struct VerifyPolicy {
  enum class Mode { Exhaustive, SpotCheck };
  Mode mode = Mode::Exhaustive;
  /// Premise indices checked at each infinitary node (SpotCheck).
  std::vector<std::uint64_t> samples;
  /// Nodes deeper than this are not inspected (SpotCheck).
  std::uint64_t depth_bound = 4096;

  static VerifyPolicy exhaustive() { return {}; }
  static VerifyPolicy spot_check(std::vector<std::uint64_t> samples,
                                 std::uint64_t depth_bound = 4096) {
    return VerifyPolicy{Mode::SpotCheck, std::move(samples), depth_bound};
  }
};

struct VerifyReport {
  struct Sampled {
    std::string path;
    std::vector<std::uint64_t> indices;
  };

  bool ok = true;
  std::uint64_t visited = 0;
  std::vector<Sampled> sampled;
  std::string error;
  /// Premise path of the failing node, e.g. "root/2/0".
  std::string error_path;
};

VerifyReport verify(const Cert& c, const VerifyPolicy& policy);

struct Inconsistency {
  bool flagged = false;
  std::string detail;
};

/// Flags a pair p: b <= [a], q: a < [b] (shapes only).
Inconsistency incompatible(const Cert& p, const Cert& q);

/// Line form, leaves first: `#k rule(conclusion){#i,#j}`. Throws
/// KernelError on infinitary certificates.
std::string serialize(const Cert& c);

// -- Proof search -------------------------------------------------------------

/// Builds a certificate by replaying the engine's own evaluation; nullopt
/// unless the engine answers True at this fuel.
std::optional<Cert> certify(const Judgment& j, Fuel fuel = {});

struct ProverOptions {
  /// Engine fuel for the leaves; wide enough for the largest sample.
  Fuel fuel{32, 512};
  /// Nesting of structural steps beyond the engine.
  std::uint64_t depth = 160;
  /// Largest witness index tried per rhs member.
  std::uint64_t witness_width = 64;
  /// Indices a lazily generated strategy must satisfy to be accepted, along
  /// with witness_width + 1; also the SpotCheck sample set.
  std::vector<std::uint64_t> samples = {0, 1, 2, 3, 5, 8, 13, 31};
};

/// Engine-guided search combined with structural steps (pointwise
/// comparison of equally indexed names, single-witness strict steps). The
/// result has passed SpotCheck verification with `samples`. Acceptance of
/// infinitely branching steps is by sampling, so a claim that fails only
/// at indices far beyond every sample can still be certified.
std::optional<Cert> prove(const Judgment& j, const ProverOptions& opts = {});

}  // namespace ordinal

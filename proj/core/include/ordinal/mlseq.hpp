#pragma once

// Martin-Löf's sequent calculus on ordinal names. A sequent is a finite set
// of atoms a < b, a <= b read as a classical disjunction, derived by
//
//   R1:   G, a <= u_n                R2:   ... G, u_n < b ...  (every n)
//        -----------------                -------------------------
//         G, a < suc(u)                    G, suc(u) <= b
//
// with Zero as the suc of the empty family (so 0 <= b is an R2 leaf).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordinal/kernel.hpp"
#include "ordinal/names.hpp"

namespace ordinal {

struct Atom {
  Name lhs;
  Rel rel = Rel::Le;
  Name rhs;

  friend bool operator==(const Atom& a, const Atom& b) {
    return same(a.lhs, b.lhs) && a.rel == b.rel && same(a.rhs, b.rhs);
  }
  friend bool operator<(const Atom& a, const Atom& b);

  std::string to_string() const;
};

/// A finite set of atoms, kept sorted by identity.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<Atom> atoms);
  explicit Sequent(std::vector<Atom> atoms);

  /// Returns whether the atom was new.
  bool insert(const Atom& a);
  bool contains(const Atom& a) const;
  bool subset_of(const Sequent& other) const;
  Sequent with(const Atom& a) const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  friend bool operator==(const Sequent& a, const Sequent& b) { return a.atoms_ == b.atoms_; }

  /// Atoms joined by ", ".
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

enum class MlRule { R1, R2 };

struct MlCertificate;
using MlCert = std::shared_ptr<const MlCertificate>;
using MlCertGenerator = std::function<MlCert(std::uint64_t)>;

struct MlCertificate {
  MlRule rule = MlRule::R2;
  Sequent conclusion;
  Atom principal;
  /// Index of the chosen u_n (R1).
  std::uint64_t n = 0;
  /// R1: one premise. R2 over a finite family: one per index.
  std::vector<MlCert> premises;
  /// R2 over a Nat family.
  MlCertGenerator premise_gen;

  bool infinitary() const { return static_cast<bool>(premise_gen); }
};

MlCert ml_r1(Sequent conclusion, Atom principal, std::uint64_t n, MlCert premise);
MlCert ml_r2(Sequent conclusion, Atom principal, std::vector<MlCert> premises);
MlCert ml_r2(Sequent conclusion, Atom principal, MlCertGenerator gen);

/// Decides derivability of a sequent over hereditarily finitary names and
/// returns a derivation when there is one. Throws InvalidArgument on
/// infinitary names.
std::optional<MlCert> ml_prove(const Sequent& s);
bool ml_derivable(const Sequent& s);

/// Re-checks every visited node. A premise may omit atoms of the expected
/// premise sequent (weakening is admissible), but may not add any.
VerifyReport ml_verify(const MlCert& c, const VerifyPolicy& policy);

/// The derivation of a < b for a = suc-family of u_n, b = suc-family of
/// u_n + 1, with u a nondecreasing 0/1 sequence (caller contract). Bits are
/// read on demand while premises are generated.
MlCert ml_lpo_cert(const BitSeq& u);

}  // namespace ordinal

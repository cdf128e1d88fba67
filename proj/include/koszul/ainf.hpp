#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

// Basis morphism of a finite directed category with based hom spaces.
// src/dst are positions in the object order (directedness: src < dst for
// non-identity morphisms, src == dst only for the degree-0 identities).
struct BasisMorphism {
    std::string label;
    int src = 0;
    int dst = 0;
    int degree = 0;
    bool is_identity = false;
};

// A scalar multiple of a basis morphism, or zero (basis == -1, coeff == 0).
struct SignedTerm {
    Rat coeff;
    int basis = -1;

    static SignedTerm zero() { return {}; }
    bool is_zero() const { return coeff.is_zero(); }
    friend bool operator==(const SignedTerm& a, const SignedTerm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.coeff == b.coeff && a.basis == b.basis;
    }
};

// Finite directed category with graded hom spaces spanned by explicit basis
// morphisms and a signed composition table.
//
// Argument order convention, used by every interface below: a composition
// table key lists the arguments as (a_d, ..., a_1) where a_1 is the FIRST
// morphism applied (the source-most one), so a_1 : X_0 -> X_1,
// a_2 : X_1 -> X_2, ..., a_d : X_{d-1} -> X_d and the value lies in
// hom(X_0, X_d). Keys are stored as morphism indices in that order.
class GradedBasisCategory {
public:
    using Key = std::vector<int>;  // (a_d, ..., a_1)

    class Builder {
    public:
        // Objects are appended in their total order.
        int add_object(const std::string& label);
        // Identity morphisms are created automatically per object.
        int add_morphism(const std::string& label, int src, int dst, int degree);
        // Rejects keys violating composability, the degree law
        // deg(result) = sum deg(args) + 2 - d, or strict unitality
        // (identities may only appear in arity-2 keys).
        void set_mu(const Key& args, const Rat& coeff, int result);
        // Installs the strictly-unital values mu^2(a, 1) = a and
        // mu^2(1, a) = (-1)^{deg a} a for every morphism.
        void add_unital_mu2();
        int identity_of(int object) const { return identity_of_.at(object); }
        GradedBasisCategory build();

    private:
        friend class GradedBasisCategory;
        std::vector<std::string> objects_;
        std::vector<BasisMorphism> morphisms_;
        std::vector<int> identity_of_;
        std::map<Key, SignedTerm> mu_;
    };

    int object_count() const { return static_cast<int>(objects_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<BasisMorphism>& morphisms() const { return morphisms_; }
    const BasisMorphism& morphism(int i) const { return morphisms_.at(i); }
    int identity_of(int object) const { return identity_of_.at(object); }
    const std::map<Key, SignedTerm>& mu_table() const { return mu_; }

    std::optional<int> find_morphism(const std::string& label) const;
    // Basis morphisms with the given source object, ascending index.
    const std::vector<int>& morphisms_from(int object) const { return by_src_.at(object); }
    // Basis morphisms from object `src` to object `dst` of degree `deg`.
    std::vector<int> hom_basis(int src, int dst, int deg) const;
    int hom_dim(int src, int dst, int deg) const;

    // Table lookup. Absent keys are zero. A non-composable tuple is a
    // caller bug and throws std::logic_error.
    SignedTerm mu_eval(std::span<const int> args) const;

    // Sum of coefficients per output basis element of the full signed
    // associativity expression
    //   sum_{i,j} (-1)^{star_i} mu^{d-j+1}(a_d,...,a_{i+j+1},
    //                                       mu^j(a_{i+j},...,a_{i+1}),
    //                                       a_i,...,a_1)
    // with star_i = sum_{1<=l<=i} (deg(a_l) - 1). All-zero means the
    // relation holds on this chain. Chain in (a_d, ..., a_1) order.
    std::map<int, Rat> stasheff_sum(std::span<const int> chain) const;

private:
    friend class Builder;
    std::vector<std::string> objects_;
    std::vector<BasisMorphism> morphisms_;
    std::vector<int> identity_of_;
    std::map<Key, SignedTerm> mu_;
    // morphisms with a given source object, ascending index
    std::vector<std::vector<int>> by_src_;
};

struct FailedChain {
    std::vector<int> chain;                       // (a_d, ..., a_1)
    std::vector<std::pair<int, Rat>> survivors;   // basis -> nonzero sum
    std::string describe(const GradedBasisCategory& cat) const;
};

struct AinfReport {
    bool passed = true;
    long long chains_checked = 0;
    std::vector<FailedChain> failures;  // canonical enumeration order
};

// Checks the signed associativity relation on every composable basis chain
// (identities included) of arity 1..max_chain.
AinfReport verify_ainfty(const GradedBasisCategory& cat, int max_chain);

// Directed subcategory on the given objects in the given order: keeps a
// non-identity morphism X -> Y only when X precedes Y in the list, makes
// fresh identities, restricts mu to surviving keys.
GradedBasisCategory restrict_directed(const GradedBasisCategory& cat,
                                      const std::vector<int>& objects);

// True iff there is an order-preserving object bijection and a
// degree-preserving basis bijection matching the two mu tables up to a
// per-basis-element sign rescaling (backtracking over the slot-wise
// candidate matchings, sign gauge solved as a GF(2) linear system).
bool categories_isomorphic(const GradedBasisCategory& a,
                           const GradedBasisCategory& b);

}  // namespace koszul

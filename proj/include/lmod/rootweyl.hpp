#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmod/intmat.hpp"

namespace lmod {

using Rat = boost::rational<int64_t>;
using RVec = std::vector<Rat>;
using IVec = std::vector<int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using Mask = uint32_t;

// boost::rational<int64_t> compared against a plain int recurses; compare via sgn
inline int sgn(const Rat& x) { return x.numerator() > 0 ? 1 : (x.numerator() < 0 ? -1 : 0); }

Rat dot(const RVec& x, const RVec& y);
RVec axpy(const RVec& x, Rat t, const RVec& y);  // x + t*y

struct IVecHash {
    size_t operator()(const IVec& v) const;
};

// Finite irreducible root system in an orthonormal rational realization.
// Roots are stored in simple-root coordinates; weights in fundamental-weight
// coordinates ("labels"). The invariant form is the ambient dot product.
struct RootDatum {
    char cartan_type = 'A';
    int rank = 0;
    int ambient_dim = 0;
    std::vector<RVec> simple_roots;
    std::vector<std::vector<Rat>> gram;
    IntMatrix cartan;  // cartan(i,j) = 2(a_i,a_j)/(a_j,a_j)
    std::vector<IVec> positive_roots;
    std::vector<Mask> root_support;
    RVec rho;
    std::vector<RVec> fundamental_weights;
    BigInt weyl_order;

    std::string name() const { return std::string(1, cartan_type) + std::to_string(rank); }
    Mask full() const { return rank >= 32 ? ~Mask(0) : ((Mask(1) << rank) - 1); }
    int num_positive() const { return int(positive_roots.size()); }
    // index of a positive root, or -1
    int root_index(const IVec& coords) const;
    RVec root_ambient(const IVec& coords) const;
    RVec weight_ambient(const IVec& labels) const;
    IVec root_to_labels(const IVec& coords) const;
    int height(int root) const;

    std::unordered_map<IVec, int, IVecHash> index;
};

// Throws std::invalid_argument for an invalid type/rank pair.
RootDatum build_root_system(char cartan_type, int rank);
RootDatum build_root_system(const std::string& label);  // "C2", "E6", "G2"

BigInt weyl_order_formula(char cartan_type, int rank);

int popcount(Mask m);
std::string mask_str(Mask m, int rank);  // "{1,3}"

// ---- parabolics (indexed by their Levi simple-root mask) ----

int levi_positive_count(const RootDatum& D, Mask levi);
int dim_nilradical(const RootDatum& D, Mask P, Mask Q);  // dim n_P^Q; throws unless P <= Q
int dim_nilradical(const RootDatum& D, Mask P);          // Q = G

enum class Perversity { m, n };
int perversity_value(Perversity p, int codim);
struct CodimPerv {
    int codim;
    int value;
};
CodimPerv codim_and_perversity(const RootDatum& D, Mask P, Perversity p);  // throws for P = G

// ---- Weyl group ----

struct WeylElement {
    IntMatrix action;       // on the weight lattice (fundamental weight basis)
    IntMatrix root_action;  // same element on the root lattice (simple root basis)
    std::vector<int> word;  // a reduced word when known (0-based simple indices)
    bool has_word = false;
    bool operator==(const WeylElement& o) const { return action == o.action; }
};

WeylElement weyl_identity(const RootDatum& D);
WeylElement simple_reflection(const RootDatum& D, int i);
WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);
WeylElement weyl_from_word(const RootDatum& D, const std::vector<int>& word);
WeylElement weyl_inverse(const RootDatum& D, const WeylElement& w);

IVec apply_weight(const WeylElement& w, const IVec& labels);
IVec apply_root(const WeylElement& w, const IVec& coords);
bool is_positive_root(const IVec& coords);

int weyl_length(const RootDatum& D, const WeylElement& w);
// N(w) = {g > 0 : w^{-1} g < 0}, as indices into positive_roots
std::vector<int> inversion_set(const RootDatum& D, const WeylElement& w);
std::vector<int> left_descents(const RootDatum& D, const WeylElement& w);
// lexicographically smallest reduced word
std::vector<int> reduced_word(const RootDatum& D, const WeylElement& w);
std::string word_str(const std::vector<int>& word);  // "s1 s2" (1-based)

bool is_min_coset_rep(const RootDatum& D, const WeylElement& w, Mask levi);
WeylElement longest_element(const RootDatum& D, Mask levi);

// W_P = {w : w^{-1}(Delta^P) > 0}, sorted by length then lex reduced word.
std::vector<WeylElement> enumerate_min_coset_reps(const RootDatum& D, Mask levi,
                                                  std::optional<int> max_length = std::nullopt);

// Streaming depth-first variant: visits every element of W_P once, without
// storing the set. The callback receives the orbit labels y = w^{-1}x, the
// element and the new inversion root added on the last step (-1 at the root).
// Returning false from the callback prunes the subtree.
struct CosetVisit {
    const IVec& y;
    const WeylElement& w;
    int length;
    int new_root;
};
void for_each_min_coset_rep(const RootDatum& D, Mask levi,
                            const std::function<bool(const CosetVisit&)>& visit);

// Explicit tree nodes, for splitting the traversal into independent subtrees.
struct CosetNode {
    IVec y;
    WeylElement w;
    int length = 0;
    int new_root = -1;
};
CosetNode coset_tree_root(const RootDatum& D, Mask levi);
std::vector<CosetNode> coset_children(const RootDatum& D, const CosetNode& n);
// visits the subtree below (and including) start
void for_each_min_coset_rep(const RootDatum& D, const CosetNode& start,
                            const std::function<bool(const CosetVisit&)>& visit);

struct Factorization {
    WeylElement upper;  // w^Q in the Levi Weyl group of Q
    WeylElement lower;  // w_Q, minimal for Q
    int len_upper;      // l^Q(w)
    int len_lower;      // l_Q(w)
};
Factorization factorize(const RootDatum& D, const WeylElement& w, Mask P, Mask Q);

// l_Q(w) = #inversions of w outside the Levi of Q
int bidegree_lower(const RootDatum& D, const std::vector<int>& inversions, Mask Q);

}  // namespace lmod

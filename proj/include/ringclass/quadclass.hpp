#ifndef RINGCLASS_QUADCLASS_HPP
#define RINGCLASS_QUADCLASS_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ringclass/integers.hpp"

namespace ringclass {

// d = 1 is allowed and stands for the rational field (cyclic cubic bookkeeping).
bool is_fundamental_discriminant(i64 d);

// Throws validation_error naming the offending square factor.
void require_fundamental_discriminant(i64 d);

// Binary quadratic form a x^2 + b xy + c y^2.
struct quadratic_form {
    i64 a = 0, b = 0, c = 0;

    i128 disc() const { return (i128)b * b - 4 * (i128)a * (i128)c; }
    i128 eval(i64 x, i64 y) const
    {
        return (i128)a * x * x + (i128)b * x * y + (i128)c * y * y;
    }

    bool operator==(const quadratic_form& o) const = default;
    bool operator<(const quadratic_form& o) const
    {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Unique reduced representative, d < 0 (|b| <= a <= c, b >= 0 on boundary).
quadratic_form reduce_definite(quadratic_form f);
bool is_reduced_definite(const quadratic_form& f);

// Reduction into the cycle window for d > 0 (|sqrt(d) - 2|a|| < b < sqrt(d)).
quadratic_form reduce_indefinite(quadratic_form f, i64 d);
bool is_reduced_indefinite(const quadratic_form& f, i64 d);
quadratic_form rho_step(const quadratic_form& f, i64 d);

// Dirichlet composition; the result is reduced (d < 0) or cycle-normalized (d > 0).
quadratic_form compose(const quadratic_form& f, const quadratic_form& g);

enum class class_group_sense { wide, narrow };

// Class group of a quadratic field computed from reduced forms.
// For d > 0 the form classes give the narrow group; the wide group is the
// quotient by the sign-flip involution (a,b,c) -> (-a,b,-c).  The odd part,
// and in particular the 3-rank, agrees in both senses.
class quad_class_group {
public:
    explicit quad_class_group(i64 d, class_group_sense sense = class_group_sense::wide);

    i64 discriminant() const { return d_; }
    class_group_sense sense() const { return sense_; }

    i64 class_number() const { return (i64)reps_.size(); }
    i64 narrow_class_number() const { return narrow_h_; }

    size_t principal_index() const { return principal_; }
    const quadratic_form& class_rep(size_t i) const { return reps_[i]; }

    // Class of an arbitrary form of discriminant d.
    size_t index_of(quadratic_form f) const;

    size_t compose_classes(size_t i, size_t j) const;
    size_t class_pow(size_t i, i64 e) const;
    i64 class_order(size_t i) const;

    // dim_F3 Cl[3]: counts classes killed by 3.
    int rank3() const;

    // Generators with prime-power orders (primary decomposition).
    std::vector<std::pair<quadratic_form, i64>> generators() const;

    // d > 0 only: true iff the narrow and wide groups coincide.
    bool norm_minus_one() const { return narrow_h_ == (i64)reps_.size() || d_ < 0; }

private:
    void build_definite();
    void build_indefinite();
    size_t class_of_reduced(const quadratic_form& f) const;

    i64 d_;
    class_group_sense sense_;
    i64 narrow_h_ = 0;
    std::vector<quadratic_form> reps_;           // canonical class representatives
    size_t principal_ = 0;
    // d < 0: all reduced forms are reps.  d > 0: lookup of reduced form -> class.
    std::unordered_map<i64, size_t> lookup_;     // key packs (a,b)
};

// F3-dimension of the 3-torsion of Cl(Q(sqrt(d))); rho3(1) = 0.
int rho3(i64 d);

// Form in the given class with positive leading coefficient coprime to m.
quadratic_form class_representative_coprime(const quad_class_group& cl, size_t idx, i64 m);

// Fundamental unit (x + y sqrt(d))/2 of the maximal order, d > 1,
// by the continued fraction of (P0 + sqrt(d))/2.
struct quad_unit {
    mpz_class x, y;  // (x + y sqrt(d))/2
    int norm;        // +1 or -1
};
quad_unit fundamental_unit(i64 d);

// p-Selmer rank from the class rank: rho, or rho + 1 for d > 0 and (p=3, d=-3).
int selmer_rank(i64 p, i64 d, int rho);

// Bundle used by the CLI and the Selmer module.
struct quad_field_data {
    i64 d;
    i64 h;
    int rho3;
    int sigma3;
    bool torsion;  // d == -3
    std::optional<quad_unit> unit;
};
quad_field_data make_field_data(i64 d);

} // namespace ringclass

#endif

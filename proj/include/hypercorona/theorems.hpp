#pragma once

// Closed-form characteristic polynomials and spectra of corona products.
//
// Polynomials follow char_poly's convention det(M - xI). Each evaluation is
// exact: products over eigenvalues are rewritten as char polys composed with
// rational functions, so irrational base eigenvalues need no special care.

#include <string>
#include <vector>

#include "hypercorona/corona.hpp"
#include "hypercorona/spectrum.hpp"

namespace hypercorona {

/// prod_i det(Y_i - xI)^p * det(A0' + I_t (x) ((a - b^2 pm / D) J_p - (a + x) I_p)),
/// D = r(k-1) + c(m-1) - x. Target: corona_adjacency_blocks.
IntPolynomial charpoly_generalized_adjacency(const CoronaConfig& cfg);

enum class CTermSign {
  Plus,   ///< leading factor (r(k-1) + c(m-1) - x)^n
  Minus,  ///< leading factor (r(k-1) - c(m-1) - x)^n
};
std::string sign_name(CTermSign s);

/// The p = 1, t = n triple product from the base spectrum and the attachment
/// spectra:
///   L(x)^n * prod_{i, j >= 2} (lambda_j^(i) - c - x)
///          * prod_i (lambda_i' + (x^2 - (r(k-1) + c(m-1)) x - b^2 m) / (r(k-1) + c(m-1) - x)).
/// Returned as a rational function because the Minus sign generally leaves
/// a denominator. Throws CoronaError when an attachment spectrum lacks the
/// Perron value r(k-1) or the orders disagree.
RationalFunction charpoly_regular_corona(const Spectrum& g0, const std::vector<Spectrum>& attachments, int r, int k,
                                int m, CTermSign sign);

/// ((h + pmt)/h) * prod_i det(Y_Si - J - xI)^p * det(inner), where
/// inner = S(G0)' + I_t (x) (-(2a + 4pmb^2/h) J_p + (2a - x) I_p)
///         - (pm/h) ((t - 4b) - pm (t - 2b)^2 / (h + pmt)) J_n.
/// Target: corona_seidel_blocks.
IntPolynomial charpoly_generalized_seidel(const CoronaConfig& cfg);

/// Factors of the p = 1, t = n Seidel product.
struct SeidelP1Factors {
  IntPolynomial perron;       ///< (mu1 - x)(h + mn) - m(n - 2b)^2
  IntPolynomial base;         ///< prod_{i >= 2} (mu_i h - 4mb^2 - x h)
  IntPolynomial attachments;  ///< prod_{i, j >= 2} (mu_j^(i) + 2c - x)
  IntPolynomial product() const { return perron * base * attachments; }
};
/// Seidel spectra of a (k, r0)-regular base on n vertices and of (k, r)-regular
/// attachments on m vertices. Throws CoronaError when a supplied spectrum lacks
/// its Perron value (n-1-2r0(k-1), resp. m-1-2r(k-1)).
SeidelP1Factors charpoly_seidel_p1(const Spectrum& g0_seidel, const std::vector<Spectrum>& gi_seidel, int r0,
                                   int r, int k, int m);

/// One eigenvalue class of a closed form.
struct ClosedFormPiece {
  AlgebraicValue value;
  int multiplicity = 1;
  std::string provenance;
};

struct ClosedFormSpectrum {
  std::string theorem;
  CoronaModel target = CoronaModel::Kronecker;
  std::vector<ClosedFormPiece> pieces;
  int order() const;
  std::vector<long double> flattened() const;  // descending
  long double largest() const;
};

/// Both roots of (y - lambda)(y - shift) = coupling, for every lambda in the
/// factor-backed value v: exact surds when v is rational, otherwise roots of
///   F(y) = (y - shift)^d f(y - coupling / (y - shift)).
/// Returned as {plus branch, minus branch}.
std::pair<AlgebraicValue, AlgebraicValue> lift_pair(const AlgebraicValue& v, const BigInt& shift,
                                                    const BigInt& coupling);

/// Witness eigenpair against a concrete matrix model.
struct EigenpairWitness {
  enum class Construction { BaseLift, CopyDifference };
  Construction construction = Construction::BaseLift;
  long double eigenvalue = 0;
  Eigen::VectorXd vector;
  long double residual = 0;  ///< ||Mx - lambda x||_inf / ||x||_inf
};

/// Closed-form spectrum of G0 corona G1 (Kronecker-model model) from the
/// adjacency spectra: each base eigenvalue lambda lifts to
/// (lambda + r(k-1) +- sqrt((lambda - r(k-1))^2 + 4 m b^2)) / 2, b = C(m-1, k-2),
/// and every non-Perron attachment eigenvalue appears n times.
ClosedFormSpectrum corona_two_closed_form(const Spectrum& g0, const Spectrum& g1, int r, int k, int m);

struct CoronaTwoSpectrum {
  ClosedFormSpectrum closed_form;
  std::vector<EigenpairWitness> witnesses;
  long double spectral_radius = 0;  ///< plus branch at the largest base eigenvalue
  long double max_residual = 0;
};
/// Closed form plus explicit eigenvectors checked against
/// corona_two(g0, g1, Kronecker).adjacency. Throws CoronaError unless g1
/// is regular.
CoronaTwoSpectrum spectrum_corona_two(const Hypergraph& g0, const Hypergraph& g1, double tol = 1e-8);

/// Attachment K_m^m: r(k-1) = m - 1 and b = m - 1; -1 has multiplicity n(m-1).
ClosedFormSpectrum spectrum_corona_complete(const Spectrum& g0, int m);

/// Seidel spectrum of the Kronecker-model corona of a (k, r0)-regular G0 on n
/// vertices with a (k, r1)-regular G1 on m vertices:
///   (mu - s +- sqrt((mu + s)^2 + 16 m b^2)) / 2, s = 1 + 2 r1 (k-1), for each
///   non-Perron mu of G0; each non-Perron mu_j of G1 n times; and the two roots of
///   x^2 + (2 - n(m+1) + 2(r0+r1)(k-1)) x
///       + (n-1-2r0(k-1))(mn-1-2r1(k-1)) - m(n-2b)^2.
/// A repeated G0 Perron value is rejected (CoronaError).
ClosedFormSpectrum seidel_spectrum_corona_two(const Spectrum& g0_seidel, const Spectrum& g1_seidel, int r0,
                                              int r1, int k, int m, int n);

/// P1^n * P0(x + b^2 chi1(x)), cleared to a polynomial. Target: the
/// Kronecker-model adjacency of G0 corona G1.
IntPolynomial charpoly_via_coronal(const IntPolynomial& p0, const IntPolynomial& p1, const RationalFunction& chi1,
                                   const BigInt& b, int n);

/// Removes one root `value` from p exactly: p / (value - x).
IntPolynomial remove_root(const IntPolynomial& p, const BigInt& value);

}  // namespace hypercorona

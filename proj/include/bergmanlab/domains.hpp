#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bergmanlab/errors.hpp"

namespace bergman {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

enum class Kind { TypeI, TypeII, TypeIII, TypeIV, Polydisc, Ball };

// Structure constants of a domain family: rank, characteristic multiplicity,
// genus, complex dimension, kernel index, and the kernel exponent lambda = p*k.
struct Characteristics {
    int r = 0;
    int a = 0;
    int p = 0;
    int N = 0;
    double k = 1.0;
    double lambda = 0.0;
};

struct DomainPoint {
    Vector coords;

    DomainPoint() = default;
    explicit DomainPoint(Vector c) : coords(std::move(c)) {}
    int dim() const { return static_cast<int>(coords.size()); }
};

// One of the six families: I(m,n), II(n), III(n), IV(n), D(n) (polydisc), B(n).
class DomainDescriptor {
  public:
    DomainDescriptor(Kind kind, int m, int n);
    static DomainDescriptor type_i(int m, int n) { return {Kind::TypeI, m, n}; }
    static DomainDescriptor type_ii(int n) { return {Kind::TypeII, 0, n}; }
    static DomainDescriptor type_iii(int n) { return {Kind::TypeIII, 0, n}; }
    static DomainDescriptor type_iv(int n) { return {Kind::TypeIV, 0, n}; }
    static DomainDescriptor polydisc(int n) { return {Kind::Polydisc, 0, n}; }
    static DomainDescriptor ball(int n) { return {Kind::Ball, 0, n}; }

    // Textual config form: "I(2,3)", "II(2)", "III(4)", "IV(4)", "D(3)", "B(2)".
    static DomainDescriptor parse(const std::string& text);
    std::string format() const;

    Kind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return chars_.N; }
    const Characteristics& characteristics() const { return chars_; }

    bool is_cartan() const {
        return kind_ == Kind::TypeI || kind_ == Kind::TypeII || kind_ == Kind::TypeIII ||
               kind_ == Kind::TypeIV;
    }
    bool is_matrix_kind() const {
        return kind_ == Kind::TypeI || kind_ == Kind::TypeII || kind_ == Kind::TypeIII;
    }
    // The kinds whose rank-2 spectral test path is exposed.
    bool is_rank2_path_kind() const;

    int matrix_rows() const;
    int matrix_cols() const;

    // Independent-entry coordinate chart for the matrix kinds: the (row, col)
    // matrix position of coordinate index J.
    std::pair<int, int> coord_position(int j) const;

    // Full matrix view of a point; symmetry/skew-symmetry holds exactly by
    // construction. Round-trips with from_matrix losslessly.
    Matrix matrix_view(const DomainPoint& z) const;
    DomainPoint from_matrix(const Matrix& z) const;

    bool operator==(const DomainDescriptor& o) const {
        return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_;
    }

  private:
    Kind kind_;
    int m_;
    int n_;
    Characteristics chars_;
};

void require_point(const DomainDescriptor& d, const DomainPoint& z);

// Minkowski gauge of z: the domain is {gauge < 1}. Types I-III: sigma_max of
// the matrix view; IV: largest spectral value; polydisc: max |z_j|; ball: |z|.
double gauge(const DomainDescriptor& d, const DomainPoint& z);

bool contains(const DomainDescriptor& d, const DomainPoint& z);

// Euclidean distance to the boundary. Types I-III: 1 - sigma_max; polydisc:
// min_j (1 - |z_j|); ball: 1 - |z|; IV: constrained minimization over the two
// boundary strata with 32 restarts, tolerance 1e-8.
double boundary_distance(const DomainDescriptor& d, const DomainPoint& z);

// Rank-2 spectral point t*e1 + T*e2 for I(2,n), II(2), III(4), III(5), IV(n).
DomainPoint test_path(const DomainDescriptor& d, double t, double T);

// Sample slot i of the uniform stream: a pure function of (d, seed, i),
// regardless of how other slots are consumed. Rejection runs inside the slot's
// substream.
DomainPoint sample_slot(const DomainDescriptor& d, std::uint64_t seed, std::uint64_t slot);

std::vector<DomainPoint> sample_uniform(const DomainDescriptor& d, std::uint64_t seed,
                                        std::int64_t count);

// Volume of the enclosing proposal region used by rejection sampling.
double proposal_box_volume(const DomainDescriptor& d);

// Lebesgue volume, exact for polydisc (pi^n) and ball (pi^n/n!); the cached
// value feeds the kernel normalization C_Omega = 1/v.
double log_volume_cached(const DomainDescriptor& d);

}  // namespace bergman

#pragma once

#include <functional>
#include <vector>

#include "sgswell/fluxes.hpp"

namespace sgswell {

/// Legendre-Gauss-Lobatto collocation operators of degree N: the N+1 nodes,
/// the diagonal-mass quadrature weights, and the nodal derivative matrix.
/// Satisfies the summation-by-parts identity M D + D^T M = diag(-1,0,...,1).
struct DGOperators {
    int N = 0;
    Vec nodes;
    Vec weights;
    Mat D;
};

/// Builds the LGL operators; interior nodes by Newton iteration on the
/// Legendre derivative. Throws on non-convergence.
DGOperators lgl_operators(int N);

struct Mesh1D {
    double x0 = 0.0, x1 = 1.0;
    int nel = 1;
    double dx() const { return (x1 - x0) / nel; }
    double node_x(const DGOperators& ops, int el, int i) const
    {
        return x0 + dx() * (el + 0.5 * (ops.nodes(i) + 1.0));
    }
};

struct Mesh2D {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    int nelx = 1, nely = 1;
    double dx() const { return (x1 - x0) / nelx; }
    double dy() const { return (y1 - y0) / nely; }
    double node_x(const DGOperators& ops, int ex, int i) const
    {
        return x0 + dx() * (ex + 0.5 * (ops.nodes(i) + 1.0));
    }
    double node_y(const DGOperators& ops, int ey, int j) const
    {
        return y0 + dy() * (ey + 0.5 * (ops.nodes(j) + 1.0));
    }
};

enum class Bc { Periodic, Wall, Outflow };
enum class InterfaceMode { EC, ES };

/// Nodal conservative coefficients plus static nodal bathymetry.
/// Storage is a flat array indexed element-major, node, variable, mode;
/// variables are (h, q) in 1D and (h, q1, q2) in 2D.
struct Field {
    int dim = 1;
    int K = 1;
    int nvar = 2;
    int N = 1; // polynomial degree
    int nelx = 1, nely = 1;
    double time = 0.0;
    std::vector<double> u;
    std::vector<double> b;
    std::vector<double> b_values; // cached cell values of b, same layout

    int nn() const { return N + 1; }
    int nodes_per_element() const { return dim == 1 ? nn() : nn() * nn(); }
    int n_elements() const { return nelx * nely; }
    int n_nodes() const { return n_elements() * nodes_per_element(); }

    int node_index_1d(int el, int i) const { return el * nn() + i; }
    int node_index_2d(int ex, int ey, int i, int j) const
    {
        return ((ey * nelx + ex) * nn() + j) * nn() + i;
    }
    int offset(int node, int var) const { return (node * nvar + var) * K; }

    double* at(int node, int var) { return u.data() + offset(node, var); }
    const double* at(int node, int var) const { return u.data() + offset(node, var); }
    double* b_at(int node) { return b.data() + node * K; }
    const double* b_at(int node) const { return b.data() + node * K; }

    /// Allocates zeroed storage for the given shape.
    static Field make_1d(int nel, int degree, int K);
    static Field make_2d(int nelx, int nely, int degree, int K);

    /// Recomputes the cached cell values of b; call after filling b.
    void finalize_bathymetry(const SgAlgebra& alg);
};

/// Additive manufactured-solution style source hook: receives the physical
/// node coordinates and time, writes nvar*K coefficient increments.
using NodeSource = std::function<void(double x, double y, double t, double* out)>;

struct System1D {
    const SgAlgebra* alg = nullptr;
    DGOperators ops;
    Mesh1D mesh;
    EcFamily family = EcFamily::Central1D;
    InterfaceMode mode = InterfaceMode::EC;
    Bc bc = Bc::Periodic;
    double g = 9.81;
    double eps_pos = kEpsPositivity;
    int threads = 1;
};

struct System2D {
    const SgAlgebra* alg = nullptr;
    DGOperators ops;
    Mesh2D mesh;
    InterfaceMode mode = InterfaceMode::EC;
    Bc bcx = Bc::Periodic;
    Bc bcy = Bc::Periodic;
    double g = 9.81;
    double eps_pos = kEpsPositivity;
    int threads = 1;
    NodeSource extra_source; // optional
};

/// Ghost state of one boundary node: periodic wraps, wall mirrors the state
/// with the normal discharge negated, outflow copies the interior state.
/// `normal_var` is the discharge component normal to the boundary (1 for q
/// or q1, 2 for q2). Values are stochastic cell values.
void ghost_state(Bc bc, int K, int nvar, int normal_var, const double* interior_vals,
                 const double* periodic_vals, double* out);

/// Semi-discrete right-hand side of the flux-differencing DGSEM:
///   dx/2 du_i = -2 sum_j D_ij (F#(U_i,U_j) + S#(U_i,U_j))
///               - tau_i/w_i (F* + S#(U_i,U_ext) - F(U_i))
/// with the family two-point flux in the volume, the same family (EC mode)
/// or its LLF-dissipated version (ES mode) at interfaces, and the matched
/// two-point bathymetry source in both places. Throws NonPositiveHeight
/// with the offending location when the field leaves the admissible set.
void rhs_1d(const System1D& sys, const Field& field, double t, Field& dudt);

/// Tensor-product extension: flux differencing along each coordinate line
/// with the per-direction EC flux and direction-matched sources.
void rhs_2d(const System2D& sys, const Field& field, double t, Field& dudt);

/// Minimum SG height eigenvalue over all nodes (admissibility scan).
double min_height_eigenvalue(const SgAlgebra& alg, const Field& field);

} // namespace sgswell

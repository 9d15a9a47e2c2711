#include "sepscope/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sepscope {

bool is_hermitian(const Cmat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> hermitian_eigenvalues(const Cmat& m) {
    if (m.rows() != m.cols()) throw NonSquare("hermitian_eigenvalues: matrix not square");
    if (m.size() == 0) return {};
    if (!is_hermitian(m)) throw NonHermitian("hermitian_eigenvalues: matrix not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<Cmat> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double trace_norm(const Cmat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Cmat> svd(m);
    return svd.singularValues().sum();
}

double trace_norm(const Rmat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Rmat> svd(m);
    return svd.singularValues().sum();
}

Cmat kron(const Cmat& a, const Cmat& b) {
    Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {

// Strides for addressing a composite index as digits, leftmost most significant.
std::vector<int> strides_of(const SubsystemDims& dims) {
    std::vector<int> s(dims.dims.size());
    int acc = 1;
    for (int i = dims.size() - 1; i >= 0; --i) {
        s[static_cast<size_t>(i)] = acc;
        acc *= dims[i];
    }
    return s;
}

}  // namespace

Cmat partial_trace(const Cmat& m, const SubsystemDims& dims, const std::vector<int>& keep) {
    const int D = dims.total();
    if (m.rows() != D || m.cols() != D)
        throw DimensionMismatch("partial_trace: matrix dimension does not match dims product");
    if (keep.empty()) throw DimensionMismatch("partial_trace: keep set empty");
    std::vector<bool> kept(static_cast<size_t>(dims.size()), false);
    for (int k : keep) {
        if (k < 0 || k >= dims.size()) throw DimensionMismatch("partial_trace: keep index out of range");
        kept[static_cast<size_t>(k)] = true;
    }

    std::vector<int> kept_idx, traced_idx;
    for (int i = 0; i < dims.size(); ++i) (kept[static_cast<size_t>(i)] ? kept_idx : traced_idx).push_back(i);

    const auto strides = strides_of(dims);
    int dk = 1, dt = 1;
    for (int i : kept_idx) dk *= dims[i];
    for (int i : traced_idx) dt *= dims[i];

    // full index from (kept digits, traced digits)
    auto full_index = [&](int ik, int it) {
        int idx = 0;
        for (int n = static_cast<int>(kept_idx.size()) - 1; n >= 0; --n) {
            int d = dims[kept_idx[static_cast<size_t>(n)]];
            idx += (ik % d) * strides[static_cast<size_t>(kept_idx[static_cast<size_t>(n)])];
            ik /= d;
        }
        for (int n = static_cast<int>(traced_idx.size()) - 1; n >= 0; --n) {
            int d = dims[traced_idx[static_cast<size_t>(n)]];
            idx += (it % d) * strides[static_cast<size_t>(traced_idx[static_cast<size_t>(n)])];
            it /= d;
        }
        return idx;
    };

    Cmat out = Cmat::Zero(dk, dk);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c)
            for (int t = 0; t < dt; ++t)
                out(r, c) += m(full_index(r, t), full_index(c, t));
    return out;
}

Cmat partial_transpose(const Cmat& m, const SubsystemDims& dims, int which) {
    if (dims.size() != 2) throw DimensionMismatch("partial_transpose: expects bipartite dims");
    const int dA = dims[0], dB = dims[1];
    if (m.rows() != dA * dB || m.cols() != dA * dB)
        throw DimensionMismatch("partial_transpose: matrix dimension does not match dims");
    if (which != 0 && which != 1) throw DimensionMismatch("partial_transpose: subsystem index must be 0 or 1");

    Cmat out(m.rows(), m.cols());
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dB; ++j)
            for (int k = 0; k < dA; ++k)
                for (int l = 0; l < dB; ++l) {
                    if (which == 0)
                        out(k * dB + j, i * dB + l) = m(i * dB + j, k * dB + l);
                    else
                        out(i * dB + l, k * dB + j) = m(i * dB + j, k * dB + l);
                }
    return out;
}

Cvec vec(const Cmat& m) {
    Cvec v(m.size());
    Eigen::Index n = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) v(n++) = m(r, c);
    return v;
}

Cmat realign(const Cmat& m, const SubsystemDims& dims) {
    if (dims.size() != 2) throw DimensionMismatch("realign: expects bipartite dims");
    const int dA = dims[0], dB = dims[1];
    if (m.rows() != dA * dB || m.cols() != dA * dB)
        throw DimensionMismatch("realign: matrix dimension does not match dims");

    // Row (kA*dA + iA) and column (lB*dB + jB) pick up m[(iA,jB),(kA,lB)],
    // which makes R(a (x) b) = vec(a) vec(b)^T with column-stacking vec.
    Cmat out(dA * dA, dB * dB);
    for (int iA = 0; iA < dA; ++iA)
        for (int kA = 0; kA < dA; ++kA)
            for (int jB = 0; jB < dB; ++jB)
                for (int lB = 0; lB < dB; ++lB)
                    out(kA * dA + iA, lB * dB + jB) = m(iA * dB + jB, kA * dB + lB);
    return out;
}

}  // namespace sepscope

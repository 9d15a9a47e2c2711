#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepscope {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
using Rmat = Eigen::MatrixXd;
using Rvec = Eigen::VectorXd;

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NonHermitian : std::runtime_error {
    explicit NonHermitian(const std::string& what) : std::runtime_error(what) {}
};
struct NonSquare : std::runtime_error {
    explicit NonSquare(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidDimension : std::runtime_error {
    explicit InvalidDimension(const std::string& what) : std::runtime_error(what) {}
};
struct IncompatibleCounts : std::runtime_error {
    explicit IncompatibleCounts(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownFixture : std::runtime_error {
    explicit UnknownFixture(const std::string& what) : std::runtime_error(what) {}
};
struct TOutOfRange : std::runtime_error {
    explicit TOutOfRange(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateSpectrum : std::runtime_error {
    explicit DegenerateSpectrum(const std::string& what) : std::runtime_error(what) {}
};
struct ParamOutOfRange : std::runtime_error {
    explicit ParamOutOfRange(const std::string& what) : std::runtime_error(what) {}
};
struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidPartition : std::runtime_error {
    explicit InvalidPartition(const std::string& what) : std::runtime_error(what) {}
};
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered local dimensions of a multipartite Hilbert space.
struct SubsystemDims {
    std::vector<int> dims;

    SubsystemDims() = default;
    SubsystemDims(std::initializer_list<int> d) : dims(d) { check(); }
    explicit SubsystemDims(std::vector<int> d) : dims(std::move(d)) { check(); }

    int total() const {
        return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    }
    int size() const { return static_cast<int>(dims.size()); }
    int operator[](int i) const { return dims.at(static_cast<size_t>(i)); }

  private:
    void check() const {
        for (int d : dims)
            if (d < 2) throw InvalidDimension("subsystem dimension must be >= 2");
    }
};

}  // namespace sepscope

#include "sectorwave/field.hpp"

#include <unsupported/Eigen/FFT>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sectorwave/errors.hpp"
#include "json.hpp"

namespace sectorwave {

namespace {

Eigen::FFT<Real>& fft_engine() {
    thread_local Eigen::FFT<Real> engine;
    return engine;
}

// DFT_b = sum_n v_n exp(-2 pi i b n / N), no normalization.
ArrayXc dft(const ArrayXc& v) {
    Eigen::VectorXcd in = v.matrix(), out;
    fft_engine().fwd(out, in);
    return out.array();
}

// IDFT_n = (1/N) sum_b v_b exp(+2 pi i b n / N).
ArrayXc idft(const ArrayXc& v) {
    Eigen::VectorXcd in = v.matrix(), out;
    fft_engine().inv(out, in);
    return out.array();
}

// Grid points start at -L, so bin b picks up the phase (-1)^b relative to
// the plain DFT; folding it here keeps spectrum_b ~= \hat u(k_b).
ArrayXc alternating_signs(int n) {
    ArrayXc s(n);
    for (int i = 0; i < n; ++i) s[i] = (i % 2 == 0) ? 1.0 : -1.0;
    return s;
}

}  // namespace

SpectralField::SpectralField(const Grid1D& grid) : grid_(grid) {}

SpectralField::SpectralField(const Grid1D& grid, ArrayXc physical_values)
    : grid_(grid), values_(std::move(physical_values)), values_valid_(true) {
    if (values_.size() != grid_.size())
        throw InvalidDomain("value count does not match grid size");
}

SpectralField SpectralField::from_spectrum(const Grid1D& grid, ArrayXc spectrum) {
    if (spectrum.size() != grid.size())
        throw InvalidDomain("spectrum size does not match grid size");
    SpectralField f(grid);
    f.spectrum_ = std::move(spectrum);
    f.spectrum_valid_ = true;
    return f;
}

SpectralField SpectralField::from_function(const Grid1D& grid,
                                           const std::function<Complex(Real)>& f) {
    ArrayXc v(grid.size());
    for (int i = 0; i < grid.size(); ++i) v[i] = f(grid.x(i));
    return SpectralField(grid, std::move(v));
}

SpectralField SpectralField::from_real_function(const Grid1D& grid,
                                                const std::function<Real(Real)>& f) {
    return from_function(grid, [&f](Real x) { return Complex(f(x), 0.0); });
}

const ArrayXc& SpectralField::values() const {
    if (!values_valid_) {
        const int n = grid_.size();
        ArrayXc tmp = spectrum_ * alternating_signs(n);
        values_ = idft(tmp) / grid_.dx();
        values_valid_ = true;
    }
    return values_;
}

const ArrayXc& SpectralField::spectrum() const {
    if (!spectrum_valid_) {
        spectrum_ = dft(values_) * alternating_signs(grid_.size()) * grid_.dx();
        spectrum_valid_ = true;
    }
    return spectrum_;
}

Real SpectralField::l2_norm() const {
    return std::sqrt(values().abs2().sum() * grid_.dx());
}

Real SpectralField::max_abs() const {
    return values().abs().maxCoeff();
}

bool SpectralField::is_real(Real tol) const {
    Real scale = std::max(Real(1), max_abs());
    return values().imag().abs().maxCoeff() <= tol * scale;
}

Real SpectralField::parseval_gap() const {
    Real phys = values().abs2().sum() * grid_.dx();
    Real spec = spectrum().abs2().sum() / (2.0 * grid_.half_length());
    Real denom = std::max(phys, std::numeric_limits<Real>::min());
    return std::abs(phys - spec) / denom;
}

Real SpectralField::trusted_bandwidth() const {
    const ArrayXc& sp = spectrum();
    Real cut = spectral_trust_cut * sp.abs().maxCoeff();
    Real kmax = 0.0;
    for (int b = 0; b < grid_.size(); ++b)
        if (std::abs(sp[b]) >= cut) kmax = std::max(kmax, std::abs(grid_.wavenumber(b)));
    return kmax;
}

SpectralField SpectralField::translated(int cells) const {
    const int n = grid_.size();
    int shift = ((cells % n) + n) % n;
    const ArrayXc& v = values();
    ArrayXc out(n);
    for (int i = 0; i < n; ++i) out[(i + shift) % n] = v[i];
    SpectralField g(grid_, std::move(out));
    g.noise_floor_ = noise_floor_;
    g.noise_warning_ = noise_warning_;
    return g;
}

Real SpectralField::noise_floor() const {
    if (noise_floor_ < 0.0) noise_floor_ = machine_eps * std::max(max_abs(), Real(0));
    return noise_floor_;
}

void SpectralField::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "x,re_u,im_u\n";
    const ArrayXc& v = values();
    char buf[128];
    for (int i = 0; i < grid_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid_.x(i),
                      v[i].real(), v[i].imag());
        out << buf;
    }
}

SpectralField SpectralField::read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<Real> xs, re, im;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, r, i;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &r, &i) != 3)
            throw IoError("malformed csv row in " + path);
        xs.push_back(x);
        re.push_back(r);
        im.push_back(i);
    }
    const int n = static_cast<int>(xs.size());
    if (n < 4 || (n & (n - 1)) != 0)
        throw IoError("csv field must have a power-of-two number of rows");
    Real dx = xs[1] - xs[0];
    for (int i = 1; i + 1 < n; ++i)
        if (std::abs(xs[i + 1] - xs[i] - dx) > 1e-9 * std::abs(dx))
            throw IoError("csv field grid is not uniform");
    Grid1D grid(-xs[0], n);
    ArrayXc v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(re[i], im[i]);
    return SpectralField(grid, std::move(v));
}

void SpectralField::write_binary(const std::string& path) const {
    nlohmann::json header;
    header["format"] = "sectorwave-field";
    header["version"] = 1;
    header["L"] = grid_.half_length();
    header["N"] = grid_.size();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << header.dump() << "\n";
    const ArrayXc& v = values();
    for (int i = 0; i < grid_.size(); ++i) {
        double re = v[i].real(), im = v[i].imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

SpectralField SpectralField::read_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string header_line;
    std::getline(in, header_line);
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(header_line);
    } catch (const std::exception& e) {
        throw IoError(std::string("bad field header: ") + e.what());
    }
    if (header.value("format", "") != "sectorwave-field")
        throw IoError("not a sectorwave field file: " + path);
    Grid1D grid(header.at("L").get<Real>(), header.at("N").get<int>());
    ArrayXc v(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        if (!in) throw IoError("truncated field payload in " + path);
        v[i] = Complex(re, im);
    }
    return SpectralField(grid, std::move(v));
}

SpectralField SpectralField::read(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return read_csv(path);
    return read_binary(path);
}

SpectralField linear_combination(Complex a, const SpectralField& f, Complex b,
                                 const SpectralField& g) {
    if (f.grid() != g.grid()) throw InvalidDomain("grid mismatch in linear combination");
    SpectralField out(f.grid(), a * f.values() + b * g.values());
    out.set_noise_floor(std::abs(a) * f.noise_floor() + std::abs(b) * g.noise_floor());
    out.set_noise_warning(f.noise_warning() || g.noise_warning());
    return out;
}

SpectralField scaled(const SpectralField& f, Complex a) {
    SpectralField out(f.grid(), ArrayXc(a * f.values()));
    out.set_noise_floor(std::abs(a) * f.noise_floor());
    out.set_noise_warning(f.noise_warning());
    return out;
}

Complex inner_product(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid()) throw InvalidDomain("grid mismatch in inner product");
    return (f.values() * g.values().conjugate()).sum() * f.grid().dx();
}

}  // namespace sectorwave

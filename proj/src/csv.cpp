#include "hh/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hh {

namespace {

std::vector<std::vector<double>> read_rows(const std::string& path, std::size_t cols) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open CSV file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {  // header
            first = false;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != cols)
            throw DomainError("CSV row in " + path + " has " + std::to_string(row.size()) +
                              " columns, expected " + std::to_string(cols));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DomainError("CSV file has no data rows: " + path);
    return rows;
}

std::vector<double> sample_grid(const ControlSignal& u, int n_samples) {
    if (u.sampled() && n_samples <= 0) return u.grid();
    const int n = n_samples > 0 ? n_samples : 512;
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = u.horizon() * i / (n - 1.0);
    return t;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ControlSignal read_control_csv(const std::string& path, double horizon,
                               ControlSignal::Interp interp) {
    const auto rows = read_rows(path, 3);
    std::vector<double> t;
    std::vector<cplx> u;
    for (const auto& r : rows) {
        t.push_back(r[0]);
        u.emplace_back(r[1], r[2]);
    }
    const double tau = horizon > 0.0 ? horizon : t.back();
    return ControlSignal::from_samples(tau, std::move(t), std::move(u), interp);
}

void write_control_csv(const std::string& path, const ControlSignal& u, int n_samples) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write CSV file: " + path);
    out << "t,re_u,im_u\n";
    for (double t : sample_grid(u, n_samples)) {
        const cplx v = u.value(t);
        out << format_double(t) << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << '\n';
    }
}

void write_control_pair_csv(const std::string& path, const ControlSignal& u_minus,
                            const ControlSignal& u_plus, int n_samples) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write CSV file: " + path);
    out << "t,re_uminus,im_uminus,re_uplus,im_uplus\n";
    for (double t : sample_grid(u_minus, n_samples)) {
        const cplx a = u_minus.value(t), b = u_plus.value(t);
        out << format_double(t) << ',' << format_double(a.real()) << ',' << format_double(a.imag())
            << ',' << format_double(b.real()) << ',' << format_double(b.imag()) << '\n';
    }
}

std::pair<ControlSignal, ControlSignal> read_control_pair_csv(const std::string& path,
                                                              double horizon) {
    const auto rows = read_rows(path, 5);
    std::vector<double> t;
    std::vector<cplx> um, up;
    for (const auto& r : rows) {
        t.push_back(r[0]);
        um.emplace_back(r[1], r[2]);
        up.emplace_back(r[3], r[4]);
    }
    const double tau = horizon > 0.0 ? horizon : t.back();
    auto a = ControlSignal::from_samples(tau, t, std::move(um));
    auto b = ControlSignal::from_samples(tau, std::move(t), std::move(up));
    return {std::move(a), std::move(b)};
}

void write_state_csv(const std::string& path, std::span<const cplx> z, std::span<const cplx> w) {
    if (z.size() != w.size()) throw DomainError("write_state_csv: length mismatch");
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write CSV file: " + path);
    out << "re_z,im_z,re_w,im_w\n";
    for (std::size_t i = 0; i < z.size(); ++i)
        out << format_double(z[i].real()) << ',' << format_double(z[i].imag()) << ','
            << format_double(w[i].real()) << ',' << format_double(w[i].imag()) << '\n';
}

std::pair<std::vector<cplx>, std::vector<cplx>> read_state_csv(const std::string& path) {
    const auto rows = read_rows(path, 4);
    std::vector<cplx> z, w;
    for (const auto& r : rows) {
        z.emplace_back(r[0], r[1]);
        w.emplace_back(r[2], r[3]);
    }
    return {std::move(z), std::move(w)};
}

} // namespace hh

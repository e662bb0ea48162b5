#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dvgauss/gaussian.hpp"
#include "dvgauss/lattice.hpp"

namespace dvg {

/// Round-trip-safe default precision for CSV output.
inline constexpr int kDefaultDigits = 17;

inline std::string format_value(double v, int digits = kDefaultDigits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

/// CSV serialization of a phase-space grid: header `n,k,w`
/// (two-mode: `n1,n2,k1,k2,w`), rows in lexicographic coordinate order.
inline void write_grid_csv(const WignerGrid& grid, std::ostream& out, int digits = kDefaultDigits) {
    const LatticeDim& dim = grid.dim;
    if (grid.modes == 1) {
        out << "n,k,w\n";
        for (int n = -dim.s; n <= dim.s; ++n) {
            for (int k = -dim.s; k <= dim.s; ++k) {
                out << n << ',' << k << ',' << format_value(grid.at(n, k), digits) << '\n';
            }
        }
    } else {
        out << "n1,n2,k1,k2,w\n";
        for (int n1 = -dim.s; n1 <= dim.s; ++n1)
        for (int n2 = -dim.s; n2 <= dim.s; ++n2)
        for (int k1 = -dim.s; k1 <= dim.s; ++k1)
        for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
            out << n1 << ',' << n2 << ',' << k1 << ',' << k2 << ','
                << format_value(grid.at(n1, n2, k1, k2), digits) << '\n';
        }
    }
}

/// JSON form of a grid with the same index convention as the CSV.
inline nlohmann::json grid_to_json(const WignerGrid& grid) {
    nlohmann::json j;
    j["d"] = grid.dim.d;
    j["modes"] = grid.modes;
    j["order"] = grid.modes == 1 ? "n,k" : "n1,n2,k1,k2";
    j["values"] = grid.values;
    return j;
}

/// JSON state dump {d, modes, sigma, center, C, grid, rho}; rho is row-major
/// [[re, im], ...].
inline nlohmann::json state_to_json(const GaussianState& state,
                                    const std::vector<std::vector<double>>& sigma,
                                    const std::vector<double>& center) {
    nlohmann::json j;
    j["d"] = state.dim.d;
    j["modes"] = state.modes;
    j["sigma"] = sigma;
    j["center"] = center;
    j["C"] = state.normalization_constant;
    j["grid"] = grid_to_json(state.grid);
    nlohmann::json rho = nlohmann::json::array();
    for (Eigen::Index r = 0; r < state.rho.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < state.rho.cols(); ++c) {
            row.push_back({state.rho(r, c).real(), state.rho(r, c).imag()});
        }
        rho.push_back(row);
    }
    j["rho"] = rho;
    return j;
}

/// Atomic file write: temp file in the target directory, then rename.
/// A path of "-" writes to standard output instead.
inline void write_text_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw std::ios_base::failure("write_text_file: stdout write failed");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("write_text_file: cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::ios_base::failure("write_text_file: write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::ios_base::failure("write_text_file: rename failed for " + path);
    }
}

}  // namespace dvg

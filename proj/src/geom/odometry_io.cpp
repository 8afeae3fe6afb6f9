#include "trav/geom/odometry_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trav/core/io.hpp"

namespace trav::geom {

std::vector<OdometrySample> load_odometry(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<OdometrySample> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        double t;
        double vals[12];
        if (!(ss >> t)) {
            throw std::runtime_error("odometry line " + std::to_string(lineno) +
                                     ": bad timestamp");
        }
        for (double& v : vals) {
            if (!(ss >> v)) {
                throw std::runtime_error("odometry line " +
                                         std::to_string(lineno) +
                                         ": expected 13 numbers");
            }
        }
        if (!out.empty() && t <= out.back().timestamp) {
            throw std::runtime_error("odometry line " + std::to_string(lineno) +
                                     ": timestamps not strictly increasing");
        }
        Eigen::Matrix3d r;
        r << vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6],
            vals[7], vals[8];
        Eigen::Vector3d tr(vals[9], vals[10], vals[11]);
        try {
            out.push_back(OdometrySample{t, RigidTransform(r, tr)});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("odometry line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

void save_odometry(const std::filesystem::path& path,
                   std::span<const OdometrySample> samples) {
    std::ostringstream ss;
    for (const auto& s : samples) {
        ss << core::format_double(s.timestamp);
        const auto& r = s.pose.rotation();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ss << ' ' << core::format_double(r(i, j));
        const auto& t = s.pose.translation();
        for (int i = 0; i < 3; ++i) ss << ' ' << core::format_double(t(i));
        ss << '\n';
    }
    core::atomic_write(path, ss.str());
}

}  // namespace trav::geom

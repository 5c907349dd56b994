#include "heatctl/standardizer.hpp"

#include "heatctl/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heatctl {

Standardizer Standardizer::fit(const Frame& train, const std::vector<std::string>& columns) {
    if (train.n_rows() == 0) throw std::runtime_error("standardizer: empty training frame");
    Standardizer s;
    for (const auto& name : columns) {
        const Column& c = train.column(name);
        double n = double(c.values.size());
        double mean = 0.0;
        for (double v : c.values) mean += v;
        mean /= n;
        double var = 0.0;
        for (double v : c.values) var += (v - mean) * (v - mean);
        var /= n;
        double sd = std::sqrt(var);
        if (!(sd > 0.0))
            throw std::runtime_error("standardizer: column '" + name + "' has zero variance");
        s.stats_.push_back(ColumnStats{name, mean, sd});
    }
    return s;
}

bool Standardizer::covers(const std::string& column) const {
    for (const auto& st : stats_)
        if (st.name == column) return true;
    return false;
}

Frame Standardizer::transform(const Frame& frame) const {
    Frame out = frame;
    for (const auto& st : stats_) {
        if (!out.has_column(st.name)) continue;
        for (double& v : out.column(st.name).values) v = (v - st.mean) / st.stddev;
    }
    return out;
}

Frame Standardizer::inverse(const Frame& frame) const {
    Frame out = frame;
    for (const auto& st : stats_) {
        if (!out.has_column(st.name)) continue;
        for (double& v : out.column(st.name).values) v = v * st.stddev + st.mean;
    }
    return out;
}

double Standardizer::transform_value(const std::string& column, double v) const {
    for (const auto& st : stats_)
        if (st.name == column) return (v - st.mean) / st.stddev;
    return v;
}

void Standardizer::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    for (const auto& st : stats_)
        out << st.name << '\t' << format_double(st.mean) << '\t' << format_double(st.stddev)
            << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Standardizer Standardizer::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Standardizer s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        ColumnStats st;
        std::string mean_tok, sd_tok;
        if (!std::getline(ss, st.name, '\t') || !std::getline(ss, mean_tok, '\t') ||
            !std::getline(ss, sd_tok))
            throw std::runtime_error("'" + path + "': bad standardizer line '" + line + "'");
        st.mean = std::stod(mean_tok);
        st.stddev = std::stod(sd_tok);
        s.stats_.push_back(st);
    }
    return s;
}

}  // namespace heatctl

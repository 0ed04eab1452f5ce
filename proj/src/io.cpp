#include "stokeslab/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "stokeslab/errors.hpp"
#include "stokeslab/numerics.hpp"

namespace stokes::io {

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_height_field(const HeightField& hf, const std::filesystem::path& basename) {
    nlohmann::json j;
    j["nq"] = hf.grid.nq;
    j["np"] = hf.grid.np;
    j["L"] = hf.grid.L;
    j["periods"] = hf.grid.periods;
    j["lambda"] = hf.lambda;
    j["R"] = hf.R;
    j["t_label"] = hf.t_label;
    write_text(basename.string() + ".json", j.dump(2) + "\n");

    std::ostringstream csv;
    for (int i = 0; i < hf.grid.nq; ++i) {
        for (int jj = 0; jj < hf.grid.np; ++jj) {
            if (jj) csv << ',';
            csv << num::format_double(hf.h(i, jj));
        }
        csv << '\n';
    }
    write_text(basename.string() + ".csv", csv.str());
}

HeightField load_height_field(const std::filesystem::path& basename) {
    const auto j = nlohmann::json::parse(read_text(basename.string() + ".json"));
    HeightField hf;
    hf.grid = Grid{j.at("nq").get<int>(), j.at("np").get<int>(), j.at("L").get<double>(),
                   j.at("periods").get<int>()};
    hf.lambda = j.at("lambda").get<double>();
    hf.R = j.at("R").get<double>();
    hf.t_label = j.at("t_label").get<double>();
    hf.h.resize(hf.grid.nq, hf.grid.np);

    std::istringstream csv(read_text(basename.string() + ".csv"));
    std::string line;
    for (int i = 0; i < hf.grid.nq; ++i) {
        if (!std::getline(csv, line))
            throw IoFailure("checkpoint row count mismatch in " + basename.string());
        std::istringstream ls(line);
        std::string cell;
        for (int jj = 0; jj < hf.grid.np; ++jj) {
            if (!std::getline(ls, cell, ','))
                throw IoFailure("checkpoint column count mismatch in " + basename.string());
            hf.h(i, jj) = std::stod(cell);
        }
    }
    return hf;
}

}  // namespace stokes::io

#include "iann/network_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace iann {

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        throw parse_error(std::string("network JSON: ") + name + " must have " + std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw parse_error(std::string("network JSON: ") + name + " row " + std::to_string(r) + " must have " +
                              std::to_string(cols) + " entries");
        }
        for (int c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
    return m;
}

}  // namespace

std::string network_to_json(const Network& net) {
    net.topology.validate();
    if (!net.all_finite()) throw validation_error("cannot serialize a network with non-finite weights");
    nlohmann::json j;
    j["format"] = "iann-network-v1";
    j["topology"] = {{"n_inputs", net.topology.n_inputs},
                     {"n_hidden", net.topology.n_hidden},
                     {"n_outputs", net.topology.n_outputs}};
    j["w_in"] = matrix_to_json(net.w_in);
    j["theta_hidden"] = net.theta_hidden;
    j["w_out"] = matrix_to_json(net.w_out);
    j["theta_out"] = net.theta_out;
    return j.dump(2) + "\n";
}

Network network_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("network JSON: ") + e.what());
    }
    try {
        if (j.value("format", "") != "iann-network-v1") {
            throw parse_error("network JSON: missing or unknown format tag");
        }
        Topology t{j.at("topology").at("n_inputs").get<int>(), j.at("topology").at("n_hidden").get<int>(),
                   j.at("topology").at("n_outputs").get<int>()};
        t.validate();
        Network net = Network::zeros(t);
        net.w_in = matrix_from_json(j.at("w_in"), t.n_hidden, t.n_inputs, "w_in");
        net.w_out = matrix_from_json(j.at("w_out"), t.n_outputs, t.n_hidden, "w_out");
        net.theta_hidden = j.at("theta_hidden").get<std::vector<double>>();
        net.theta_out = j.at("theta_out").get<std::vector<double>>();
        if (static_cast<int>(net.theta_hidden.size()) != t.n_hidden ||
            static_cast<int>(net.theta_out.size()) != t.n_outputs) {
            throw parse_error("network JSON: bias vector lengths do not match topology");
        }
        if (!net.all_finite()) throw parse_error("network JSON: non-finite weight");
        return net;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("network JSON: ") + e.what());
    }
}

void save_network(const Network& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open for writing: " + path);
    out << network_to_json(net);
}

Network load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open network file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return network_from_json(buf.str());
}

}  // namespace iann

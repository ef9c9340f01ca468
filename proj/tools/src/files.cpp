#include "singeq/cli/files.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

namespace singeq::cli {

namespace {

using nlohmann::json;

Complex read_pair(const json& item, const char* what, std::size_t index)
{
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
        throw InputError(std::string(what) + "[" + std::to_string(index) + "] is not a pair of numbers");
    }
    const Complex z{item[0].get<double>(), item[1].get<double>()};
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError(std::string(what) + "[" + std::to_string(index) + "] is not finite");
    }
    return z;
}

std::vector<Complex> read_pairs(const json& tree, const char* key)
{
    const json& list = tree.at(key);
    if (!list.is_array()) {
        throw InputError(std::string(key) + " must be a list");
    }
    std::vector<Complex> out;
    out.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(read_pair(list[i], key, i));
    }
    return out;
}

void indent(std::ostream& os, int depth)
{
    for (int i = 0; i < depth; ++i) {
        os << "  ";
    }
}

bool is_flat(const json& array)
{
    for (const json& item : array) {
        if (item.is_structured()) {
            return false;
        }
    }
    return true;
}

void emit(std::ostream& os, const json& value, int depth)
{
    switch (value.type()) {
    case json::value_t::number_float: {
        const double x = value.get<double>();
        if (!std::isfinite(x)) {
            os << "null";
            return;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        os << buf;
        return;
    }
    case json::value_t::array: {
        if (value.empty()) {
            os << "[]";
            return;
        }
        // Short scalar lists such as [x, y] stay on one line.
        if (is_flat(value) && value.size() <= 2) {
            os << '[';
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << (i ? ", " : "");
                emit(os, value[i], depth + 1);
            }
            os << ']';
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
            indent(os, depth + 1);
            emit(os, value[i], depth + 1);
            os << (i + 1 < value.size() ? ",\n" : "\n");
        }
        indent(os, depth);
        os << ']';
        return;
    }
    case json::value_t::object: {
        if (value.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = value.begin(); it != value.end(); ++it, ++i) {
            indent(os, depth + 1);
            os << json(it.key()).dump() << ": ";
            emit(os, it.value(), depth + 1);
            os << (i + 1 < value.size() ? ",\n" : "\n");
        }
        indent(os, depth);
        os << '}';
        return;
    }
    default:
        os << value.dump();
        return;
    }
}

}  // namespace

ConfigurationFile parse_configuration(const nlohmann::json& tree)
{
    if (!tree.is_object()) {
        throw InputError("configuration must be a JSON object");
    }
    if (!tree.contains("points")) {
        throw InputError("configuration has no points");
    }
    ConfigurationFile file;
    file.points = read_pairs(tree, "points");
    if (tree.contains("strengths") && !tree.at("strengths").is_null()) {
        file.strengths = read_pairs(tree, "strengths");
        if (file.strengths->size() != file.points.size()) {
            throw InputError("strengths do not match points");
        }
    }
    if (tree.contains("metadata")) {
        if (!tree.at("metadata").is_object()) {
            throw InputError("metadata must be an object");
        }
        file.metadata = tree.at("metadata");
    }
    return file;
}

ConfigurationFile read_configuration(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    nlohmann::json tree;
    try {
        tree = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return parse_configuration(tree);
}

nlohmann::json complex_pair(Complex z)
{
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json complex_list(std::span<const Complex> values)
{
    nlohmann::json list = nlohmann::json::array();
    for (const Complex& z : values) {
        list.push_back(complex_pair(z));
    }
    return list;
}

nlohmann::json to_json(const ConfigurationFile& file)
{
    nlohmann::json tree = nlohmann::json::object();
    tree["points"] = complex_list(file.points);
    if (file.strengths) {
        tree["strengths"] = complex_list(*file.strengths);
    }
    tree["metadata"] = file.metadata;
    return tree;
}

void write_json(std::ostream& os, const nlohmann::json& tree)
{
    emit(os, tree, 0);
    os << '\n';
}

}  // namespace singeq::cli

#include "steenrod/adem_cache.hpp"

#include <fstream>
#include <sstream>

namespace steenrod {

namespace {

constexpr const char* kHeader = "ADEMCACHE 1";

bool parse_record(const std::string& line, std::pair<int, int>* key, Element* value) {
    std::istringstream in(line);
    int a = 0, b = 0;
    char colon = 0;
    if (!(in >> a >> b >> colon) || colon != ':')
        return false;
    if (a < 1 || b < 1 || a >= 2 * b)
        return false;
    Element out = Element::zero(a + b);
    while (true) {
        int k = 0, l = 0;
        if (!(in >> k))
            break;
        if (!(in >> l))
            return false;
        Seq term;
        if (l == 0)
            term = {k};
        else
            term = {k, l};
        if (!is_admissible(term) || seq_degree(term) != a + b)
            return false;
        out += Element{a + b, {std::move(term)}};
        char sep = 0;
        if (!(in >> sep))
            break;
        if (sep != ';')
            return false;
    }
    std::string rest;
    if (in.clear(), std::getline(in, rest) && rest.find_first_not_of(" \t\r") != std::string::npos)
        return false;
    *key = {a, b};
    *value = std::move(out);
    return true;
}

}  // namespace

AdemCacheLoad load_adem_cache(const std::string& path) {
    AdemCacheLoad result;
    std::ifstream in(path);
    if (!in) {
        result.warning = "cache file not found: " + path;
        return result;
    }
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        result.warning = "cache header mismatch, ignoring " + path;
        return result;
    }
    std::map<std::pair<int, int>, Element> table;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::pair<int, int> key;
        Element value;
        if (!parse_record(line, &key, &value)) {
            result.warning = "corrupt cache record at line " + std::to_string(line_no) + ", ignoring " + path;
            return result;
        }
        table[key] = std::move(value);
    }
    result.entries = table.size();
    adem_install_seed(std::move(table));
    result.loaded = true;
    return result;
}

bool save_adem_cache(const std::string& path, int degree_cap, std::string* error) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        if (error)
            *error = "cannot open cache file for writing: " + path;
        return false;
    }
    out << kHeader << '\n';
    for (const auto& [key, value] : adem_expansions_upto(degree_cap)) {
        out << key.first << ' ' << key.second << " :";
        bool first = true;
        for (const Seq& term : value.terms) {
            out << (first ? " " : " ; ");
            first = false;
            out << term[0] << ' ' << (term.size() > 1 ? term[1] : 0);
        }
        out << '\n';
    }
    out.flush();
    if (!out) {
        if (error)
            *error = "write failure on cache file: " + path;
        return false;
    }
    return true;
}

}  // namespace steenrod

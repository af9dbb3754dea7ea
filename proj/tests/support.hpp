#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "unicover/polytext.hpp"

namespace support {

inline unicover::VarTablePtr vars(std::initializer_list<const char*> names) {
    return unicover::VarTable::make(std::vector<std::string>(names.begin(), names.end()));
}

inline unicover::Poly P(const unicover::VarTablePtr& v, const std::string& text) {
    return unicover::parse_poly(text, v);
}

inline std::string data_path(const std::string& name) { return std::string(UNICOVER_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
    std::ifstream in(data_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace support

namespace doctest {
template <>
struct StringMaker<unicover::Poly> {
    static String convert(const unicover::Poly& f) {
        return f.vars() ? unicover::render_poly(f).c_str() : "<no vars>";
    }
};
}  // namespace doctest

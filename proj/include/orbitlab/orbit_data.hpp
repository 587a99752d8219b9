#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/errors.hpp"

namespace orbitlab {

// Weighted Dynkin diagrams of nilpotent orbits in the exceptional types, Bourbaki numbering.
// One record per line: <type>;<Bala-Carter label>;<m1,...,ml>. A '~' marks a short-root factor.
inline constexpr std::string_view kExceptionalOrbitData = R"(
G2;0;0,0
G2;A1;0,1
G2;~A1;1,0
G2;G2(a1);0,2
G2;G2;2,2
F4;0;0,0,0,0
F4;A1;1,0,0,0
F4;~A1;0,0,0,1
F4;A1+~A1;0,1,0,0
F4;A2;2,0,0,0
F4;~A2;0,0,0,2
F4;A2+~A1;0,0,1,0
F4;B2;2,0,0,1
F4;~A2+A1;0,1,0,1
F4;C3(a1);1,0,1,0
F4;F4(a3);0,2,0,0
F4;B3;2,2,0,0
F4;C3;1,0,1,2
F4;F4(a2);0,2,0,2
F4;F4(a1);2,2,0,2
F4;F4;2,2,2,2
E6;0;0,0,0,0,0,0
E6;A1;0,1,0,0,0,0
E6;2A1;1,0,0,0,0,1
E6;3A1;0,0,0,1,0,0
E6;A2;0,2,0,0,0,0
E6;A2+A1;1,1,0,0,0,1
E6;2A2;2,0,0,0,0,2
E6;A2+2A1;0,0,1,0,1,0
E6;A3;1,2,0,0,0,1
E6;2A2+A1;1,0,0,1,0,1
E6;A3+A1;0,1,1,0,1,0
E6;D4(a1);0,0,0,2,0,0
E6;A4;2,2,0,0,0,2
E6;D4;0,2,0,2,0,0
E6;A4+A1;1,1,1,0,1,1
E6;A5;2,1,1,0,1,2
E6;D5(a1);1,2,1,0,1,1
E6;E6(a3);2,0,0,2,0,2
E6;D5;2,2,0,2,0,2
E6;E6(a1);2,2,2,0,2,2
E6;E6;2,2,2,2,2,2
E7;0;0,0,0,0,0,0,0
E7;A1;1,0,0,0,0,0,0
E7;2A1;0,0,0,0,0,1,0
E7;(3A1)'';0,0,0,0,0,0,2
E7;(3A1)';0,0,1,0,0,0,0
E7;A2;2,0,0,0,0,0,0
E7;4A1;0,1,0,0,0,0,1
E7;A2+A1;1,0,0,0,0,1,0
E7;A2+2A1;0,0,0,1,0,0,0
E7;2A2;0,0,0,0,0,2,0
E7;A2+3A1;0,2,0,0,0,0,0
E7;A3;2,0,0,0,0,1,0
E7;(A3+A1)'';2,0,0,0,0,0,2
E7;2A2+A1;0,0,1,0,0,1,0
E7;(A3+A1)';1,0,0,1,0,0,0
E7;A3+2A1;1,0,0,0,1,0,1
E7;D4(a1);0,0,2,0,0,0,0
E7;D4;2,0,2,0,0,0,0
E7;D4(a1)+A1;0,1,1,0,0,0,1
E7;A3+A2;0,0,0,1,0,1,0
E7;A3+A2+A1;0,0,0,0,2,0,0
E7;A4;2,0,0,0,0,2,0
E7;(A5)'';2,0,0,0,0,2,2
E7;D4+A1;2,1,1,0,0,0,1
E7;A4+A1;1,0,0,1,0,1,0
E7;A4+A2;0,0,0,2,0,0,0
E7;D5(a1);2,0,0,1,0,1,0
E7;(A5)';1,0,0,1,0,2,0
E7;A5+A1;1,0,0,1,0,1,2
E7;D5(a1)+A1;2,0,0,0,2,0,0
E7;D6(a2);0,1,1,0,1,0,2
E7;E6(a3);0,0,2,0,0,2,0
E7;D5;2,0,2,0,0,2,0
E7;E7(a5);0,0,0,2,0,0,2
E7;A6;0,0,0,2,0,2,0
E7;D5+A1;2,1,1,0,1,1,0
E7;D6(a1);2,1,1,0,1,0,2
E7;E7(a4);2,0,0,2,0,0,2
E7;D6;2,1,1,0,1,2,2
E7;E6(a1);2,0,0,2,0,2,0
E7;E6;2,0,2,2,0,2,0
E7;E7(a3);2,0,0,2,0,2,2
E7;E7(a2);2,2,2,0,2,0,2
E7;E7(a1);2,2,2,0,2,2,2
E7;E7;2,2,2,2,2,2,2
E8;0;0,0,0,0,0,0,0,0
E8;A1;0,0,0,0,0,0,0,1
E8;2A1;1,0,0,0,0,0,0,0
E8;3A1;0,0,0,0,0,0,1,0
E8;A2;0,0,0,0,0,0,0,2
E8;4A1;0,1,0,0,0,0,0,0
E8;A2+A1;1,0,0,0,0,0,0,1
E8;A2+2A1;0,0,0,0,0,1,0,0
E8;A3;1,0,0,0,0,0,0,2
E8;A2+3A1;0,0,1,0,0,0,0,0
E8;2A2;2,0,0,0,0,0,0,0
E8;2A2+A1;1,0,0,0,0,0,1,0
E8;A3+A1;0,0,0,0,0,1,0,1
E8;D4(a1);0,0,0,0,0,0,2,0
E8;2A2+2A1;0,0,0,0,1,0,0,0
E8;D4;0,0,0,0,0,0,2,2
E8;A3+2A1;0,0,1,0,0,0,0,1
E8;D4(a1)+A1;0,1,0,0,0,0,1,0
E8;A3+A2;1,0,0,0,0,1,0,0
E8;A4;2,0,0,0,0,0,0,2
E8;A3+A2+A1;0,0,0,1,0,0,0,0
E8;D4(a1)+A2;0,2,0,0,0,0,0,0
E8;D4+A1;0,1,0,0,0,0,1,2
E8;2A3;1,0,0,0,1,0,0,0
E8;A4+A1;1,0,0,0,0,1,0,1
E8;D5(a1);1,0,0,0,0,1,0,2
E8;A4+2A1;0,0,0,1,0,0,0,1
E8;A4+A2;0,0,0,0,0,2,0,0
E8;A4+A2+A1;0,0,1,0,0,1,0,0
E8;A5;2,0,0,0,0,1,0,1
E8;D5(a1)+A1;0,0,0,1,0,0,0,2
E8;D4+A2;0,2,0,0,0,0,0,2
E8;E6(a3);2,0,0,0,0,0,2,0
E8;A4+A3;0,0,0,1,0,0,1,0
E8;D5;2,0,0,0,0,0,2,2
E8;A5+A1;1,0,0,1,0,0,0,1
E8;D5(a1)+A2;0,0,1,0,0,1,0,1
E8;D6(a2);0,1,1,0,0,0,1,0
E8;E6(a3)+A1;1,0,0,0,1,0,1,0
E8;E7(a5);0,0,0,1,0,1,0,0
E8;D5+A1;1,0,0,0,1,0,1,2
E8;E8(a7);0,0,0,0,2,0,0,0
E8;A6;2,0,0,0,0,2,0,0
E8;D6(a1);0,1,1,0,0,0,1,2
E8;A6+A1;1,0,0,1,0,1,0,0
E8;E7(a4);0,0,0,1,0,1,0,2
E8;D5+A2;0,0,0,0,2,0,0,2
E8;E6(a1);2,0,0,0,0,2,0,2
E8;D6;2,1,1,0,0,0,1,2
E8;D7(a2);1,0,0,1,0,1,0,1
E8;E6;2,0,0,0,0,2,2,2
E8;A7;1,0,0,1,0,1,1,0
E8;E6(a1)+A1;1,0,0,1,0,1,0,2
E8;E7(a3);2,0,0,1,0,1,0,2
E8;E8(b6);0,0,0,2,0,0,0,2
E8;D7(a1);2,0,0,0,2,0,0,2
E8;E6+A1;1,0,0,1,0,1,2,2
E8;E7(a2);0,1,1,0,1,0,2,2
E8;E8(a6);0,0,0,2,0,0,2,0
E8;D7;2,1,1,0,1,1,0,1
E8;E8(b5);0,0,0,2,0,0,2,2
E8;E7(a1);2,1,1,0,1,0,2,2
E8;E8(a5);2,0,0,2,0,0,2,0
E8;E8(b4);2,0,0,2,0,0,2,2
E8;E7;2,1,1,0,1,2,2,2
E8;E8(a4);2,0,0,2,0,2,0,2
E8;E8(a3);2,0,0,2,0,2,2,2
E8;E8(a2);2,2,2,0,2,0,2,2
E8;E8(a1);2,2,2,0,2,2,2,2
E8;E8;2,2,2,2,2,2,2,2
)";

constexpr const char* kExceptionalDataEnv = "ORBITLAB_EXCEPTIONAL_DATA";

struct OrbitRecord {
    std::string type;
    std::string label;
    std::vector<int> marks;
    std::string raw;
};

inline std::vector<OrbitRecord> parse_orbit_records(std::string_view text, const std::string& source) {
    std::vector<OrbitRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        line = line.substr(start);
        auto fail = [&](const std::string& why) {
            throw DataError(source + ":" + std::to_string(lineno) + ": record '" + line + "': " + why);
        };
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ';')) fields.push_back(f);
        if (fields.size() != 3) fail("expected 3 ';'-separated fields");
        OrbitRecord r{fields[0], fields[1], {}, line};
        if (r.type.empty() || r.label.empty()) fail("empty type or label");
        std::stringstream ms(fields[2]);
        while (std::getline(ms, f, ',')) {
            if (f.size() != 1 || f[0] < '0' || f[0] > '2') fail("mark '" + f + "' not in {0,1,2}");
            r.marks.push_back(f[0] - '0');
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Embedded records, or the file named by ORBITLAB_EXCEPTIONAL_DATA when set.
inline std::vector<OrbitRecord> exceptional_records() {
    if (const char* path = std::getenv(kExceptionalDataEnv); path && *path) {
        std::ifstream f(path);
        if (!f) throw DataError(std::string("cannot read orbit data file '") + path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_orbit_records(buf.str(), path);
    }
    return parse_orbit_records(kExceptionalOrbitData, "embedded");
}

}  // namespace orbitlab

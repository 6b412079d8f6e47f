#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gcdm/domain.hpp"

namespace testutil {

inline gcdm::DomainSpec demo_a() {
    return gcdm::DomainSpec("demo-a", 6, 1, -100.0, -99.0, -90.0);
}

inline gcdm::DomainSpec demo_sym() {
    return gcdm::DomainSpec("demo-sym", 10, 2, -50.0, -45.0, -45.0);
}

inline gcdm::DomainSpec demo_b() {
    return gcdm::DomainSpec("demo-b", 8, 1, -120.0, -120.5, -107.5);
}

inline std::string data_path(const std::string& name) {
    return std::string(GCDM_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream contents;
    contents << in.rdbuf();
    return std::move(contents).str();
}

}  // namespace testutil

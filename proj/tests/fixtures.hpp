#pragma once

#include <string>

#include "friezekit/surface.hpp"

inline std::string data_path(const std::string& name) { return std::string(FK_DATA_DIR) + "/" + name; }

inline fk::Triangulation load(const std::string& name) { return fk::Triangulation::from_file(data_path(name)); }

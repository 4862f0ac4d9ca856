#ifndef DEFCOLOR_IO_HPP
#define DEFCOLOR_IO_HPP

#include <string>

#include "defcolor/colouring.hpp"
#include "defcolor/embedding.hpp"

namespace defcolor {

// File formats (single JSON documents, sorted keys, newline-terminated):
//   graph:     {"format":"defcolor-graph/1","n":N,"rotations":[[..]],"signs":{"u-v":-1}}
//   lists:     {"format":"defcolor-lists/1","lists":[[..]],"t":T}
//   colouring: {"colours":[..],"format":"defcolor-colouring/1"}

RotationSystem parse_graph(const std::string& text);
std::string serialize_graph(const RotationSystem& rs);

struct ListsFile {
    ListAssignment lists;
    int t = 0;
};

ListsFile parse_lists(const std::string& text);
std::string serialize_lists(const ListAssignment& lists, int t);

Colouring parse_colouring(const std::string& text);
std::string serialize_colouring(const Colouring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace defcolor

#endif

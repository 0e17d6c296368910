#pragma once

// Line-oriented text format for structures and maps:
//
//   graph <name> plain <n> | graph <name> signed <k>
//   rel <graph> <a> <b>    | rel <graph> antidiagonal
//   map <name> <src> <dst>
//   <v> -> <w>             (one line per domain vertex)
//   level <n>              (tower files: tags everything that follows)
//
// '#' starts a comment. A graph without rel lines carries only r.

#include "pseudoarc/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoarc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct NamedStructure {
    std::string name;
    RelStructure structure;
    int level = -1;
};

struct NamedMap {
    std::string name;
    std::string source;
    std::string target;
    StructureMap map;
    int level = -1;
};

struct Document {
    std::vector<NamedStructure> structures;
    std::vector<NamedMap> maps;

    const NamedStructure* find_structure(const std::string& name) const;
    const NamedMap* find_map(const std::string& name) const;
    const NamedStructure& structure(const std::string& name) const;
    const NamedMap& map(const std::string& name) const;
};

Document parse_document(std::istream& in);
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

/// Emits `graph` and `rel` lines; antidiagonal relations use the shorthand.
void write_structure(std::ostream& out, const std::string& name, const RelStructure& a);
void write_map(std::ostream& out, const std::string& name, const std::string& source, const std::string& target,
               const StructureMap& f);

} // namespace pseudoarc

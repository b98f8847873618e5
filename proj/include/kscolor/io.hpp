#pragma once
/*
io.hpp
------
Text formats.

Vector set:
    # name: Q
    # N: 462
    # H: 8
    # count: 85
    -8 2 3
    ...
  One vector per line, three integers. '#' lines are comments; the
  "name", "N" and "H" keys are read back as metadata. Vectors are
  canonicalized and merged on read. write_vector_set(read_vector_set(f))
  reproduces any file written by write_vector_set byte for byte.

Coloring:          "x y z c" per line.
DIMACS CNF:        "c vertex <i+1> = x y z" comments, "p cnf V C", clauses ending in 0.
DOT:               undirected graph, vertices labelled "x,y,z".
Projection list:   "p <prime>" then nine integers per line, row-major.
Projection coloring: nine integers then the color.
*/

#include <iosfwd>
#include <span>
#include <string>

#include "kscolor/ffproj.hpp"
#include "kscolor/kssolver.hpp"
#include "kscolor/orthograph.hpp"
#include "kscolor/vecset.hpp"

namespace ks {

/// Throws std::runtime_error naming the line on malformed input.
VectorSet read_vector_set(std::istream& in);
void write_vector_set(std::ostream& out, const VectorSet& s);

VectorSet load_vector_set(const std::string& path);
void save_vector_set(const std::string& path, const VectorSet& s);

void write_coloring(std::ostream& out, const VectorSet& s, const Coloring& c);
void write_dimacs(std::ostream& out, const CnfFormula& f, const VectorSet& s);
void write_dot(std::ostream& out, const OrthoGraph& g);

void write_projection_list(std::ostream& out, unsigned p, std::span<const FpMatrix> ms);
void write_projection_coloring(std::ostream& out, std::span<const FpMatrix> ms, std::span<const std::int8_t> c);

std::string read_text_file(const std::string& path);

}  // namespace ks

#pragma once
// Text formats for families and instances.
//
//   goodfam v1 <variant> n=<n> k=<k> A=<|A|> gamma=<g> alpha=<a> beta=<b>
//   <gamma space-separated characters>            (n label lines)
//
//   sndp v1 <variant> nv=<vertex_count> k=<k>
//   t <vertex>                                    (terminal, repeatable)
//   s <vertex>                                    (source, single-source only)
//   e <u> <v> <cost>                              (edge, repeatable)
//   r <u> <v> <req>  |  r <terminal> <req>        (general | single-source)
//
// Writers emit a canonical form; readers reject structural violations with a
// 1-based line/column location, re-derive alpha/beta from gamma and the
// variant to catch tampered headers, and validate instance invariants.

#include "goodfam/label_ops.hpp"
#include "goodfam/sndp.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace goodfam {

struct FormatError : std::runtime_error {
    int line, column;
    std::string detail; // message without the location prefix
    FormatError(int line_, int column_, const std::string &detail_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + detail_),
          line(line_), column(column_), detail(detail_) {}
};

void write_family(std::ostream &out, const GoodFamily &fam);
GoodFamily read_family(std::istream &in);

void write_instance(std::ostream &out, const SndpInstance &inst);
SndpInstance read_instance(std::istream &in);

// file wrappers; throw std::runtime_error when the file cannot be opened
void write_family_file(const std::string &path, const GoodFamily &fam);
GoodFamily read_family_file(const std::string &path);
void write_instance_file(const std::string &path, const SndpInstance &inst);
SndpInstance read_instance_file(const std::string &path);

} // namespace goodfam

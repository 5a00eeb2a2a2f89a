#ifndef SYMTRACE_SYMTRACE_HPP
#define SYMTRACE_SYMTRACE_HPP

#include "symtrace/core.hpp"
#include "symtrace/exterior.hpp"
#include "symtrace/fields.hpp"
#include "symtrace/json_io.hpp"
#include "symtrace/claims.hpp"
#include "symtrace/quadform.hpp"
#include "symtrace/symalg.hpp"

#endif  // SYMTRACE_SYMTRACE_HPP

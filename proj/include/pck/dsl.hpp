#pragma once

#include "pck/dsl/ast.hpp"
#include "pck/dsl/interpreter.hpp"
#include "pck/dsl/lexer.hpp"
#include "pck/dsl/parser.hpp"
#include "pck/dsl/printer.hpp"
#include "pck/dsl/resolver.hpp"

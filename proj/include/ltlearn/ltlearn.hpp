#pragma once

#include "ltlearn/degenerate.hpp"
#include "ltlearn/errors.hpp"
#include "ltlearn/exact.hpp"
#include "ltlearn/fattern.hpp"
#include "ltlearn/formula.hpp"
#include "ltlearn/hardness.hpp"
#include "ltlearn/minimal.hpp"
#include "ltlearn/parse.hpp"
#include "ltlearn/pattern.hpp"
#include "ltlearn/sample.hpp"
#include "ltlearn/semantics.hpp"
#include "ltlearn/word.hpp"

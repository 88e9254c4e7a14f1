#pragma once

#include "letter.hpp"
#include "term.hpp"
#include "free_group.hpp"
#include "translation.hpp"
#include "word_problem.hpp"
#include "isotropy.hpp"
#include "oracle.hpp"
#include "sampling.hpp"
#include "verify.hpp"
#include "json.hpp"

#pragma once

#include "ntcov/laurent.hpp"
#include "ntcov/models.hpp"
#include "ntcov/numtheory.hpp"
#include "ntcov/product_system.hpp"
#include "ntcov/relations.hpp"
#include "ntcov/scalar.hpp"
#include "ntcov/text.hpp"
#include "ntcov/word_algebra.hpp"

#pragma once

#include "arithlat/bigint.hpp"
#include "arithlat/constructions.hpp"
#include "arithlat/errors.hpp"
#include "arithlat/findings.hpp"
#include "arithlat/graphs.hpp"
#include "arithlat/matrix.hpp"
#include "arithlat/mmatrix.hpp"
#include "arithlat/oracle.hpp"
#include "arithlat/ordering.hpp"
#include "arithlat/path_enum.hpp"
#include "arithlat/serialize.hpp"
#include "arithlat/structure.hpp"
#include "arithlat/transfer.hpp"

#pragma once

#include "chiral/abacus.hpp"
#include "chiral/bigint.hpp"
#include "chiral/binary.hpp"
#include "chiral/chirality.hpp"
#include "chiral/core_tower.hpp"
#include "chiral/partition.hpp"
#include "chiral/partition_count.hpp"
#include "chiral/perm_rep.hpp"

#pragma once

#include "tybraid/aut.hpp"
#include "tybraid/bicharacter.hpp"
#include "tybraid/braiding.hpp"
#include "tybraid/classifier.hpp"
#include "tybraid/crossed.hpp"
#include "tybraid/cyclotomic.hpp"
#include "tybraid/errors.hpp"
#include "tybraid/f2.hpp"
#include "tybraid/group.hpp"
#include "tybraid/oracle.hpp"
#include "tybraid/qform.hpp"
#include "tybraid/report.hpp"
#include "tybraid/serialize.hpp"
#include "tybraid/tables.hpp"
#include "tybraid/tydata.hpp"
#include "tybraid/wall.hpp"

# aspecis, a model weaving toolbox for cooperative requirements.
#
# This file is part of aspecis.
#
# aspecis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# aspecis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with aspecis. If not, see <http://www.gnu.org/licenses/>.

from .metamodel import Feature, MetaClass, Metamodel, PRIMITIVE_TYPES, ATTRIBUTE, REFERENCE
from .metamodel import features_of, lookup_class, validate_metamodel, to_km3
from .parser import parse_km3, parse_km3_file, KM3_GRAMMAR

from .catalog import Catalog, GroupDescriptor, CatalogFormatError, CatalogValidationError, CatalogLookupError, \
    DEFAULT_CATALOG_PATH, load_catalog, dump_catalog, merge_catalogs, build_group, validate_entry, \
    catalog_from_dicts, format_id, parse_id
from .tables import GRID, PUBLISHED_ROWS, PUBLISHED_PRODUCT, NON_SOLVABLE_IDS, PublishedRow, side_rows

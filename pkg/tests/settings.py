import os

from eternalguard.settings import augment_settings

BASE_DIR = os.path.dirname(os.path.abspath(__file__))

PRJ_DIR = os.path.dirname(BASE_DIR)

DEBUG = True

SECRET_KEY = 'zzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzz'

# the library has no models; tests never touch a database
DATABASES = {}

INSTALLED_APPS = [
    'eternalguard',
    'tests',
]

ETERNALGUARD_DEFAULT_SEED = 0

augment_settings(globals())

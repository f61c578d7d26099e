from logging import getLogger

logger = getLogger('coprime_divisor')
